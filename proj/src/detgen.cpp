#include "asmsym/detgen.hpp"

#include <stdexcept>
#include <utility>

namespace asmsym {

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < n_; ++j) std::swap(entries_[a * n_ + j], entries_[b * n_ + j]);
}

BiPoly det(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  bool negate = false;
  BiPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    // No pivot in this column: the remaining columns are dependent.
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly cross = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divexact(cross, prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BiPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

BigInt y_coef(long i, long t, long mu) {
  return binom(i + mu, 2 * i + 1 + mu - t) + binom(i + 1 + mu, 2 * i + 1 + mu - t);
}

PolyMatrix build_z_matrix(int n, int mu) {
  if (n < 1) throw std::invalid_argument("build_z_matrix requires n >= 1");
  PolyMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BiPoly entry = i == j ? BiPoly(1) : BiPoly();
      for (int k = 0; k < n; ++k) {
        const BigInt right = binom(j - k + mu - 1, j - k);
        if (right == 0) continue;
        for (int t = 0; t < n; ++t) {
          if (k - t < 0) continue;
          const BigInt mid = binom(k, t) * right;
          if (mid == 0) continue;
          if (i < n - 1) {
            entry.add_term(binom(i + mu, t) * mid, static_cast<unsigned>(k - t), 0);
          } else {
            for (int l = 0; l < n; ++l) {
              entry.add_term(binom(n - 2 + mu - l, t - l) * mid, static_cast<unsigned>(k - t),
                             static_cast<unsigned>(l + 1));
            }
          }
        }
      }
      m(i, j) = std::move(entry);
    }
  }
  return m;
}

PolyMatrix build_t_matrix(int n, int mu) {
  if (n < 1) throw std::invalid_argument("build_t_matrix requires n >= 1");
  PolyMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BiPoly entry;
      for (int t = 0; t <= 2 * n - 2; ++t) {
        const int e = 2 * j - t;
        if (e < 0) continue;
        entry.add_term(binom(i + mu, t - i) * binom(j, e), static_cast<unsigned>(e), 0);
      }
      m(i, j) = std::move(entry);
    }
  }
  return m;
}

PolyMatrix build_r_matrix(int n, int mu) {
  if (n < 1) throw std::invalid_argument("build_r_matrix requires n >= 1");
  PolyMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BiPoly entry;
      for (int t = 0; t <= 2 * n - 1; ++t) {
        const int e = 2 * j + 1 - t;
        if (e < 0) continue;
        entry.add_term(y_coef(i, t, mu) * y_coef(j, t, 0), static_cast<unsigned>(e), 0);
      }
      m(i, j) = std::move(entry);
    }
  }
  return m;
}

BiPoly z_poly(int n, int mu) { return n == 0 ? BiPoly(1) : det(build_z_matrix(n, mu)); }

BiPoly t_poly(int n, int mu) { return n == 0 ? BiPoly(1) : det(build_t_matrix(n, mu)); }

BiPoly r_poly(int n, int mu) { return n == 0 ? BiPoly(1) : det(build_r_matrix(n, mu)); }

}  // namespace asmsym
