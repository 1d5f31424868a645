#pragma once

// The determinant generating functions Z_n(x,y,mu), T_n(x,mu), R_n(x,mu).

#include "asmsym/bipoly.hpp"

#include <cstddef>
#include <vector>

namespace asmsym {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const { return n_; }
  BiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t n_ = 0;
  std::vector<BiPoly> entries_;
};

/// Fraction-free (Bareiss) elimination over Z[x,y]. Every division is exact.
BiPoly det(PolyMatrix m);

/// Y(i,t,mu) = binom(i+mu, 2i+1+mu-t) + binom(i+1+mu, 2i+1+mu-t).
BigInt y_coef(long i, long t, long mu);

PolyMatrix build_z_matrix(int n, int mu);
PolyMatrix build_t_matrix(int n, int mu);
PolyMatrix build_r_matrix(int n, int mu);

/// Determinants with the conventions Z_0 = T_0 = R_0 = 1.
BiPoly z_poly(int n, int mu);
BiPoly t_poly(int n, int mu);
BiPoly r_poly(int n, int mu);

}  // namespace asmsym
