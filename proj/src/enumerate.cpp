#include "asmsym/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

namespace asmsym {

namespace {

constexpr int kMaxSize = 24;
constexpr std::size_t kMinTasks = 64;

using Cell = std::pair<int, int>;

std::vector<std::function<Cell(Cell)>> generators(SymmetryClass c, int n) {
  const int e = n - 1;
  auto vflip = [e](Cell p) { return Cell{p.first, e - p.second}; };
  auto hflip = [e](Cell p) { return Cell{e - p.first, p.second}; };
  auto half = [e](Cell p) { return Cell{e - p.first, e - p.second}; };
  auto transpose = [](Cell p) { return Cell{p.second, p.first}; };
  auto anti = [e](Cell p) { return Cell{e - p.second, e - p.first}; };
  auto quarter = [e](Cell p) { return Cell{p.second, e - p.first}; };
  switch (c) {
    case SymmetryClass::Unrestricted: return {};
    case SymmetryClass::Flip: return {vflip};
    case SymmetryClass::HalfTurn: return {half};
    case SymmetryClass::Transpose: return {transpose};
    case SymmetryClass::QuarterTurn: return {quarter};
    case SymmetryClass::Plus: return {vflip, hflip};
    case SymmetryClass::Diagonals: return {transpose, anti};
    case SymmetryClass::Full: return {transpose, vflip};
  }
  return {};
}

bool contains_half_turn(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::HalfTurn:
    case SymmetryClass::QuarterTurn:
    case SymmetryClass::Plus:
    case SymmetryClass::Diagonals:
    case SymmetryClass::Full: return true;
    default: return false;
  }
}

std::uint32_t reverse_bits(std::uint32_t s, int n) {
  std::uint32_t r = 0;
  for (int j = 0; j < n; ++j) {
    if (s >> j & 1U) r |= 1U << (n - 1 - j);
  }
  return r;
}

bool successor_rec(std::uint32_t state, int n, bool palindromic, int j, int p, std::uint32_t next,
                   std::int8_t* row, const std::function<bool(std::uint32_t)>& fn) {
  if (j == n) return p == 1 && fn(next);
  const int c = static_cast<int>(state >> j & 1U);
  auto try_value = [&](int v) {
    const int np = p + v;
    const int nc = c + v;
    if (np < 0 || np > 1 || nc < 0 || nc > 1) return false;
    row[j] = static_cast<std::int8_t>(v);
    return successor_rec(state, n, palindromic, j + 1, np, nc ? next | 1U << j : next, row, fn);
  };
  if (palindromic && n - 1 - j < j) return try_value(row[n - 1 - j]);
  return try_value(0) || try_value(1) || try_value(-1);
}

// Checks that `from` -> `to` is one ASM row (entries to - from alternate,
// starting and ending with +1).
bool is_transition(std::uint32_t from, std::uint32_t to, int n) {
  int p = 0;
  for (int j = 0; j < n; ++j) {
    p += static_cast<int>(to >> j & 1U) - static_cast<int>(from >> j & 1U);
    if (p < 0 || p > 1) return false;
  }
  return p == 1;
}

}  // namespace

bool any_successor(std::uint32_t state, int n, bool palindromic,
                   const std::function<bool(std::uint32_t)>& fn) {
  std::vector<std::int8_t> row(static_cast<std::size_t>(n), 0);
  return successor_rec(state, n, palindromic, 0, 0, 0, row.data(), fn);
}

class SearchWorker {
 public:
  SearchWorker(const AsmSearch& s, const AsmVisitor* visit) : s_(s), visit_(visit), n_(s.n_) {
    m_.assign(static_cast<std::size_t>(n_ * n_), 0);
    col_.assign(static_cast<std::size_t>(n_), 0);
    leaf_ = Asm(n_);
  }

  // Enumerates the admissible prefixes of `rows` rows instead of leaves.
  void collect(int rows, std::vector<std::vector<std::int8_t>>* sink) {
    stop_row_ = rows;
    sink_ = sink;
    row(0);
  }

  void run(const std::vector<std::int8_t>& prefix, int rows) {
    std::copy(prefix.begin(), prefix.end(), m_.begin());
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < n_; ++j) col_[static_cast<std::size_t>(j)] += m_[static_cast<std::size_t>(i * n_ + j)];
    }
    state_ = 0;
    for (int j = 0; j < n_; ++j) {
      if (col_[static_cast<std::size_t>(j)]) state_ |= 1U << j;
    }
    row(rows);
  }

 private:
  const AsmSearch& s_;
  const AsmVisitor* visit_;
  int n_;
  std::vector<std::int8_t> m_;
  std::vector<std::int8_t> col_;
  std::uint32_t state_ = 0;
  Asm leaf_;
  int stop_row_ = -1;
  std::vector<std::vector<std::int8_t>>* sink_ = nullptr;

  void row(int i) {
    if (i == stop_row_) {
      sink_->emplace_back(m_.begin(), m_.begin() + i * n_);
      return;
    }
    if (i == s_.searched_rows_) {
      leaf();
      return;
    }
    if (s_.row_local_) {
      const std::uint32_t from = state_;
      std::int8_t* row_entries = m_.data() + i * n_;
      for (const std::uint32_t to : s_.successors_[from]) {
        for (int j = 0; j < n_; ++j) {
          row_entries[j] = static_cast<std::int8_t>(static_cast<int>(to >> j & 1U) - static_cast<int>(from >> j & 1U));
        }
        state_ = to;
        row(i + 1);
      }
      state_ = from;
      return;
    }
    cell(i, 0, 0);
  }

  void cell(int i, int j, int p) {
    if (j == n_) {
      if (p == 1 && s_.reach_[static_cast<std::size_t>(i + 1)][state_]) row(i + 1);
      return;
    }
    const auto idx = static_cast<std::size_t>(i * n_ + j);
    const int c = col_[static_cast<std::size_t>(j)];
    const int src = s_.source_[idx];
    // With p, c in {0,1}, the only nonzero candidate is +1 (both zero) or
    // -1 (both one).
    const int alt = (p == 0 && c == 0) ? 1 : (p == 1 && c == 1) ? -1 : 0;
    if (src >= 0) {
      const int v = m_[static_cast<std::size_t>(src)];
      if (v == 0) {
        m_[idx] = 0;
        cell(i, j + 1, p);
      } else if (v == alt) {
        place(i, j, p, idx, v);
      }
      return;
    }
    m_[idx] = 0;
    cell(i, j + 1, p);
    if (alt != 0) place(i, j, p, idx, alt);
  }

  void place(int i, int j, int p, std::size_t idx, int v) {
    m_[idx] = static_cast<std::int8_t>(v);
    col_[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(col_[static_cast<std::size_t>(j)] + v);
    state_ ^= 1U << j;
    cell(i, j + 1, p + v);
    state_ ^= 1U << j;
    col_[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(col_[static_cast<std::size_t>(j)] - v);
    m_[idx] = 0;
  }

  void leaf() {
    const int n = n_;
    const int top = s_.searched_rows_;
    for (int i = 0; i < top; ++i) {
      for (int j = 0; j < n; ++j) leaf_.at(i, j) = m_[static_cast<std::size_t>(i * n + j)];
    }
    if (s_.completion_ == AsmSearch::Completion::HalfTurn) {
      if (n % 2 == 1) {
        const int mid = n / 2;
        for (int j = 0; j < n; ++j) {
          const int below = static_cast<int>(state_ >> (n - 1 - j) & 1U);
          const int above = static_cast<int>(state_ >> j & 1U);
          leaf_.at(mid, j) = static_cast<std::int8_t>(1 - below - above);
        }
        for (int j = 0; j < n; ++j) {
          const int src = s_.source_[static_cast<std::size_t>(mid * n + j)];
          if (src >= 0 && leaf_(mid, j) != leaf_(src / n, src % n)) return;
        }
      }
      for (int i = 0; i < top; ++i) {
        for (int j = 0; j < n; ++j) leaf_.at(n - 1 - i, n - 1 - j) = leaf_(i, j);
      }
    }
    (*visit_)(leaf_);
  }
};

AsmSearch::AsmSearch(int n, SymmetryClass c) : n_(n), class_(c) {
  if (n < 1 || n > kMaxSize) throw std::invalid_argument("ASM size must be in 1..24");
  empty_ = !exists_by_parity(c, n);
  completion_ = contains_half_turn(c) ? Completion::HalfTurn : Completion::None;
  palindromic_rows_ = c == SymmetryClass::Flip || c == SymmetryClass::Plus || c == SymmetryClass::Full;
  searched_rows_ = completion_ == Completion::HalfTurn ? n / 2 : n;
  if (empty_) return;
  build_sources();
  build_reach();
  build_tasks();
}

bool AsmSearch::target(std::uint32_t state) const {
  const std::uint32_t full = n_ == 32 ? ~0U : (1U << n_) - 1;
  if (completion_ == Completion::None) return state == full;
  const std::uint32_t mirrored = reverse_bits(state, n_);
  if (n_ % 2 == 0) return (state ^ mirrored) == full && (state & mirrored) == 0;
  return is_transition(state, ~mirrored & full, n_);
}

void AsmSearch::build_sources() {
  const auto gens = generators(class_, n_);
  source_.assign(static_cast<std::size_t>(n_ * n_), -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::vector<Cell> orbit{{i, j}};
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& g : gens) {
          const Cell next = g(orbit[k]);
          if (std::find(orbit.begin(), orbit.end(), next) == orbit.end()) orbit.push_back(next);
        }
      }
      const Cell rep = *std::min_element(orbit.begin(), orbit.end());
      if (rep != Cell{i, j}) source_[static_cast<std::size_t>(i * n_ + j)] = rep.first * n_ + rep.second;
    }
  }
}

void AsmSearch::build_reach() {
  const std::size_t states = std::size_t{1} << n_;
  // Successor lists only know about mirror copies inside a palindromic row.
  row_local_ = true;
  for (int idx = 0; idx < searched_rows_ * n_; ++idx) {
    const int src = source_[static_cast<std::size_t>(idx)];
    if (src < 0) continue;
    const bool mirror = palindromic_rows_ && src / n_ == idx / n_ && src % n_ == n_ - 1 - idx % n_;
    if (!mirror) row_local_ = false;
  }
  if (row_local_) successors_.assign(states, {});
  reach_.assign(static_cast<std::size_t>(searched_rows_ + 1), std::vector<std::uint8_t>(states, 0));
  for (std::size_t s = 0; s < states; ++s) {
    if (std::popcount(s) == searched_rows_) {
      reach_[static_cast<std::size_t>(searched_rows_)][s] = target(static_cast<std::uint32_t>(s)) ? 1 : 0;
    }
  }
  for (int level = searched_rows_ - 1; level >= 0; --level) {
    const auto& next = reach_[static_cast<std::size_t>(level + 1)];
    auto& here = reach_[static_cast<std::size_t>(level)];
    for (std::size_t s = 0; s < states; ++s) {
      if (std::popcount(s) != level) continue;
      if (row_local_) {
        auto& succ = successors_[s];
        any_successor(static_cast<std::uint32_t>(s), n_, palindromic_rows_, [&](std::uint32_t t) {
          if (next[t]) succ.push_back(t);
          return false;
        });
        here[s] = succ.empty() ? 0 : 1;
      } else {
        here[s] = any_successor(static_cast<std::uint32_t>(s), n_, palindromic_rows_,
                                [&](std::uint32_t t) { return next[t] != 0; })
                      ? 1
                      : 0;
      }
    }
  }
}

void AsmSearch::build_tasks() {
  tasks_.clear();
  split_rows_ = 0;
  if (!reach_[0][0]) return;
  tasks_.emplace_back();
  for (int rows = 1; rows <= searched_rows_ && tasks_.size() < kMinTasks; ++rows) {
    std::vector<std::vector<std::int8_t>> prefixes;
    SearchWorker w(*this, nullptr);
    w.collect(rows, &prefixes);
    tasks_ = std::move(prefixes);
    split_rows_ = rows;
  }
}

void AsmSearch::run_task(std::size_t task, const AsmVisitor& visit) const {
  SearchWorker w(*this, &visit);
  w.run(tasks_.at(task), split_rows_);
}

void AsmSearch::run(const AsmVisitor& visit) const {
  for (std::size_t t = 0; t < tasks_.size(); ++t) run_task(t, visit);
}

void enumerate(int n, SymmetryClass c, const AsmVisitor& visit) { AsmSearch(n, c).run(visit); }

std::uint64_t count_asms(int n, SymmetryClass c, unsigned threads) {
  const AsmSearch search(n, c);
  std::vector<std::uint64_t> counts(search.task_count(), 0);
  parallel_for(search.task_count(), threads, [&](std::size_t t) {
    std::uint64_t local = 0;
    search.run_task(t, [&](const Asm&) { ++local; });
    counts[t] = local;
  });
  std::uint64_t total = 0;
  for (auto v : counts) total += v;
  return total;
}

std::vector<Asm> collect_asms(int n, SymmetryClass c) {
  std::vector<Asm> out;
  enumerate(n, c, [&](const Asm& m) { out.push_back(m); });
  return out;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace asmsym
