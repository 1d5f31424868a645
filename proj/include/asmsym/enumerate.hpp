#pragma once

// Symmetry-restricted backtracking over alternating sign matrices.
//
// Rows are placed top to bottom; the column partial sums after each row form
// a 0/1 vector (the search state). Within a row, a cell whose symmetry orbit
// contains an earlier cell (row-major order) copies that cell's value, so
// only a fundamental domain is branched on. Classes containing the half turn
// search only the top floor(n/2) rows: the middle row is then fixed by the
// column sums and the bottom half is the rotated top half. A precomputed
// reachability table prunes every state that cannot reach an admissible
// final state.

#include "asmsym/asm.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace asmsym {

using AsmVisitor = std::function<void(const Asm&)>;

class AsmSearch {
 public:
  AsmSearch(int n, SymmetryClass c);

  int size() const { return n_; }
  SymmetryClass symmetry() const { return class_; }
  /// Rows branched on; the remainder is derived by symmetry.
  int searched_rows() const { return searched_rows_; }

  /// The search splits into disjoint subtrees, one per admissible prefix of
  /// the first few rows. The split depends only on (n, class).
  std::size_t task_count() const { return tasks_.size(); }
  void run_task(std::size_t task, const AsmVisitor& visit) const;
  void run(const AsmVisitor& visit) const;

 private:
  friend class SearchWorker;

  enum class Completion { None, HalfTurn };

  int n_;
  SymmetryClass class_;
  Completion completion_;
  bool palindromic_rows_;
  int searched_rows_;
  bool empty_;
  // Row-major index of the orbit representative each cell copies, or -1.
  std::vector<int> source_;
  // reach_[level][state]: some admissible final state is reachable.
  std::vector<std::vector<std::uint8_t>> reach_;
  // When no searched cell copies a cell of an earlier row, rows depend only
  // on the state, and successors_[state] lists the next states that can
  // still reach a final state.
  bool row_local_ = false;
  std::vector<std::vector<std::uint32_t>> successors_;
  int split_rows_ = 0;
  std::vector<std::vector<std::int8_t>> tasks_;

  bool target(std::uint32_t state) const;
  void build_sources();
  void build_reach();
  void build_tasks();
};

/// Calls visit once per n x n ASM in the class, in a fixed order.
/// Sizes with no matrices by parity produce no calls.
void enumerate(int n, SymmetryClass c, const AsmVisitor& visit);

std::uint64_t count_asms(int n, SymmetryClass c, unsigned threads = 1);

/// All ASMs of the class, in visitation order.
std::vector<Asm> collect_asms(int n, SymmetryClass c);

/// Runs body(0..count-1) on up to `threads` threads; rethrows the first error.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Visits every valid next state from `state` (one ASM row placed).
/// Returns true as soon as fn returns true.
bool any_successor(std::uint32_t state, int n, bool palindromic,
                   const std::function<bool(std::uint32_t)>& fn);

}  // namespace asmsym
