#pragma once

// Plane-partition families whose weighted counts give Z_n, T_n and the
// w_{2m} polynomials, enumerated directly as independent oracles for the
// determinant and ASM computations.

#include "asmsym/bipoly.hpp"

#include <functional>
#include <vector>

namespace asmsym {

/// A member of ZZ_n(mu): a shifted array whose row i (0-based) starts in
/// column i. Row lengths strictly decrease, rows weakly decrease, columns
/// strictly decrease, and each row's first part equals its length + 2*mu.
struct ShiftedPP {
  int n = 0;
  int mu = 0;
  std::vector<std::vector<int>> rows;
};

/// Parts a_ij (1-based) with mu < a_ij <= j - i + mu.
int special_parts(const ShiftedPP& p);
/// Parts of the first row equal to n + 2*mu, counted with multiplicity.
int first_row_max_parts(const ShiftedPP& p);

void for_each_shifted_pp(int n, int mu, const std::function<void(const ShiftedPP&)>& visit);
/// Sum of x^special * y^first_row_max over ZZ_n(mu); equals Z_n(x,y,mu).
BiPoly enum_shifted_pp(int n, int mu);

/// A member of TT_n(mu): rows 1..n-1 of lengths n-1, n-2, ..., 1; rows and
/// columns weakly decrease and a_i1 <= n - i + 1 + mu.
struct TriArray {
  int n = 0;
  int mu = 0;
  std::vector<std::vector<int>> rows;
};

/// Parts a_ij (1-based) with a_ij <= j.
int special_parts(const TriArray& t);

void for_each_tri_array(int n, int mu, const std::function<void(const TriArray&)>& visit);
/// Sum of x^special over TT_n(mu); equals T_n(x,mu).
BiPoly enum_tri_array(int n, int mu);

/// Self-complementary cyclically symmetric plane partition in the box
/// [1,2m]^3, stored as the 2m x 2m array of column heights.
struct SccPP {
  int m = 0;
  std::vector<std::vector<int>> heights;
};

/// Parts a_ij (1-based) with i <= a_ij < j, taken over the cells with
/// i + j <= 2m + 1: one cell from each pair exchanged by complementation.
int special_parts(const SccPP& p);

void for_each_sccpp(int m, const std::function<void(const SccPP&)>& visit);
/// Sum of x^special over the self-complementary cyclically symmetric plane
/// partitions in [1,2m]^3.
BiPoly enum_sccpp(int m);

}  // namespace asmsym
