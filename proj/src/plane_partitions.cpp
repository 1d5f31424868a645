#include "asmsym/plane_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmsym {

int special_parts(const ShiftedPP& p) {
  int r = 0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    for (std::size_t k = 0; k < p.rows[i].size(); ++k) {
      // 1-based row i+1, column (i+1)+k: j - i = k.
      const int a = p.rows[i][k];
      if (p.mu < a && a <= static_cast<int>(k) + p.mu) ++r;
    }
  }
  return r;
}

int first_row_max_parts(const ShiftedPP& p) {
  if (p.rows.empty()) return 0;
  const auto& top = p.rows.front();
  return static_cast<int>(std::count(top.begin(), top.end(), p.n + 2 * p.mu));
}

namespace {

class ShiftedFiller {
 public:
  ShiftedFiller(int n, int mu, const std::function<void(const ShiftedPP&)>& visit) : visit_(visit) {
    pp_.n = n;
    pp_.mu = mu;
  }

  void start() { next_row(pp_.n + 1); }

 private:
  ShiftedPP pp_;
  const std::function<void(const ShiftedPP&)>& visit_;

  // Either stop here or add a row shorter than the previous one.
  void next_row(int longer_than) {
    visit_(pp_);
    const std::size_t i = pp_.rows.size();
    for (int len = 1; len < longer_than; ++len) {
      const int first = len + 2 * pp_.mu;
      // Row i starts under column i of the previous row, offset 1 in that row.
      if (i > 0 && first >= pp_.rows[i - 1][1]) continue;
      pp_.rows.emplace_back(static_cast<std::size_t>(len), 0);
      pp_.rows.back()[0] = first;
      fill(i, 1, len);
      pp_.rows.pop_back();
    }
  }

  void fill(std::size_t i, std::size_t k, int len) {
    auto& row = pp_.rows[i];
    if (k == row.size()) {
      next_row(len);
      return;
    }
    int hi = row[k - 1];
    // Cell (i, k) sits below cell (i-1, k+1).
    if (i > 0) hi = std::min(hi, pp_.rows[i - 1][k + 1] - 1);
    for (int v = 1; v <= hi; ++v) {
      row[k] = v;
      fill(i, k + 1, len);
    }
  }
};

}  // namespace

void for_each_shifted_pp(int n, int mu, const std::function<void(const ShiftedPP&)>& visit) {
  if (n < 0 || mu < 0) throw std::invalid_argument("shifted plane partitions need n, mu >= 0");
  ShiftedFiller(n, mu, visit).start();
}

BiPoly enum_shifted_pp(int n, int mu) {
  BiPoly acc;
  for_each_shifted_pp(n, mu, [&](const ShiftedPP& p) {
    acc.add_term(1, static_cast<unsigned>(special_parts(p)), static_cast<unsigned>(first_row_max_parts(p)));
  });
  return acc;
}

int special_parts(const TriArray& t) {
  int r = 0;
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) r += row[j] <= static_cast<int>(j) + 1 ? 1 : 0;
  }
  return r;
}

void for_each_tri_array(int n, int mu, const std::function<void(const TriArray&)>& visit) {
  if (n < 1 || mu < 0) throw std::invalid_argument("triangular arrays need n >= 1, mu >= 0");
  TriArray t;
  t.n = n;
  t.mu = mu;
  for (int i = 1; i <= n - 1; ++i) t.rows.emplace_back(static_cast<std::size_t>(n - i), 0);
  const int rows = n - 1;
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == rows) {
      visit(t);
      return;
    }
    if (j == static_cast<int>(t.rows[static_cast<std::size_t>(i)].size())) {
      fill(i + 1, 0);
      return;
    }
    auto& row = t.rows[static_cast<std::size_t>(i)];
    int hi = j == 0 ? n - (i + 1) + 1 + mu : row[static_cast<std::size_t>(j - 1)];
    if (i > 0) hi = std::min(hi, t.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
    for (int v = 1; v <= hi; ++v) {
      row[static_cast<std::size_t>(j)] = v;
      fill(i, j + 1);
    }
  };
  fill(0, 0);
}

BiPoly enum_tri_array(int n, int mu) {
  BiPoly acc;
  for_each_tri_array(n, mu, [&](const TriArray& t) { acc.add_term(1, static_cast<unsigned>(special_parts(t)), 0); });
  return acc;
}

int special_parts(const SccPP& p) {
  int r = 0;
  const int side = 2 * p.m;
  for (int i = 1; i <= side; ++i) {
    for (int j = 1; i + j <= side + 1; ++j) {
      const int a = p.heights[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (i <= a && a < j) ++r;
    }
  }
  return r;
}

namespace {

// Cells are filled in row-major order. The self-complementary partner of a
// later cell is always an earlier cell, so the second half is forced. Cyclic
// symmetry is the relation [k <= h(i,j)] == [i <= h(j,k)] for all i, j, k,
// checked as soon as both heights involved are known.
class SccSearch {
 public:
  SccSearch(int m, const std::function<void(const SccPP&)>& visit)
      : side_(2 * m), visit_(visit), h_(static_cast<std::size_t>(side_ * side_), 0),
        known_(static_cast<std::size_t>(side_ * side_), 0) {
    pp_.m = m;
    pp_.heights.assign(static_cast<std::size_t>(side_), std::vector<int>(static_cast<std::size_t>(side_), 0));
  }

  void run() { step(0); }

 private:
  int side_;
  const std::function<void(const SccPP&)>& visit_;
  std::vector<int> h_;
  std::vector<std::uint8_t> known_;
  SccPP pp_;

  int& h(int i, int j) { return h_[static_cast<std::size_t>((i - 1) * side_ + (j - 1))]; }
  bool known(int i, int j) const { return known_[static_cast<std::size_t>((i - 1) * side_ + (j - 1))] != 0; }

  bool cyclic_ok(int i, int j) {
    const int v = h(i, j);
    for (int k = 1; k <= side_; ++k) {
      if (known(j, k) && ((k <= v) != (i <= h(j, k)))) return false;
    }
    for (int a = 1; a <= side_; ++a) {
      if (known(a, i) && ((j <= h(a, i)) != (a <= v))) return false;
    }
    return true;
  }

  void step(int idx) {
    if (idx == side_ * side_) {
      for (int i = 1; i <= side_; ++i) {
        for (int j = 1; j <= side_; ++j) pp_.heights[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = h(i, j);
      }
      visit_(pp_);
      return;
    }
    const int i = idx / side_ + 1;
    const int j = idx % side_ + 1;
    int hi = side_;
    if (j > 1) hi = std::min(hi, h(i, j - 1));
    if (i > 1) hi = std::min(hi, h(i - 1, j));
    const int pi = side_ + 1 - i;
    const int pj = side_ + 1 - j;
    const int partner = (pi - 1) * side_ + (pj - 1);
    int lo = 0;
    if (partner < idx) {
      lo = side_ - h(pi, pj);
      hi = std::min(hi, lo);
    }
    auto& flag = known_[static_cast<std::size_t>(idx)];
    for (int v = lo; v <= hi; ++v) {
      h(i, j) = v;
      flag = 1;
      if (cyclic_ok(i, j)) step(idx + 1);
      flag = 0;
    }
    h(i, j) = 0;
  }
};

}  // namespace

void for_each_sccpp(int m, const std::function<void(const SccPP&)>& visit) {
  if (m < 0) throw std::invalid_argument("box half-size must be nonnegative");
  SccSearch(m, visit).run();
}

BiPoly enum_sccpp(int m) {
  BiPoly acc;
  for_each_sccpp(m, [&](const SccPP& p) { acc.add_term(1, static_cast<unsigned>(special_parts(p)), 0); });
  return acc;
}

}  // namespace asmsym
