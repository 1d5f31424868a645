#include "asmsym/genfun.hpp"

#include "asmsym/enumerate.hpp"

#include <cstdint>
#include <vector>

namespace asmsym {

std::pair<int, int> class_weight(const Asm& m, SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Unrestricted: return {stat_minus_ones(m), stat_top_row_pos(m)};
    case SymmetryClass::Flip: return {stat_flip_left_minus(m), 0};
    case SymmetryClass::HalfTurn: return {stat_halfturn_orbits(m), stat_top_row_pos(m)};
    case SymmetryClass::QuarterTurn: return {stat_quarterturn_orbits(m), stat_top_row_pos(m)};
    case SymmetryClass::Plus: return {stat_quadrant_minus(m), 0};
    case SymmetryClass::Transpose:
    case SymmetryClass::Diagonals:
    case SymmetryClass::Full: return {0, 0};
  }
  return {0, 0};
}

namespace {

// Dense (x exponent, y exponent) histogram; one per task, merged in order.
struct Histogram {
  int stride = 0;
  std::vector<std::uint64_t> cells;

  Histogram() = default;
  Histogram(int max_x, int max_y) : stride(max_y + 1), cells(static_cast<std::size_t>((max_x + 1) * (max_y + 1)), 0) {}

  void add(int ex, int ey) { ++cells[static_cast<std::size_t>(ex * stride + ey)]; }
  void merge(const Histogram& o) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += o.cells[i];
  }
};

}  // namespace

WeightedGF genfun(int n, SymmetryClass c, unsigned threads) {
  WeightedGF gf;
  gf.symmetry = c;
  gf.n = n;
  gf.count = 0;
  if (!exists_by_parity(c, n)) return gf;

  const AsmSearch search(n, c);
  const int max_x = n * n;
  const int max_y = n;
  std::vector<Histogram> parts(search.task_count());
  parallel_for(search.task_count(), threads, [&](std::size_t t) {
    Histogram h(max_x, max_y);
    search.run_task(t, [&](const Asm& m) {
      const auto [ex, ey] = class_weight(m, c);
      h.add(ex, ey);
    });
    parts[t] = std::move(h);
  });

  Histogram total(max_x, max_y);
  for (const auto& p : parts) total.merge(p);
  for (int ex = 0; ex <= max_x; ++ex) {
    for (int ey = 0; ey <= max_y; ++ey) {
      const std::uint64_t k = total.cells[static_cast<std::size_t>(ex * total.stride + ey)];
      if (k == 0) continue;
      BigInt coeff;
      mpz_import(coeff.get_mpz_t(), 1, 1, sizeof k, 0, 0, &k);
      gf.poly.add_term(coeff, static_cast<unsigned>(ex), static_cast<unsigned>(ey));
      gf.count += coeff;
    }
  }
  return gf;
}

}  // namespace asmsym
