#pragma once

#include "asmsym/asm.hpp"
#include "asmsym/bipoly.hpp"

#include <utility>

namespace asmsym {

/// Generating function of one symmetry class at one size:
/// A_n (class 1), F_n (2), H_n (3), Q_n (5), P_n (6). Classes 4, 7 and 8
/// carry no weight statistic and give their plain count as a constant.
struct WeightedGF {
  SymmetryClass symmetry = SymmetryClass::Unrestricted;
  int n = 0;
  BiPoly poly;
  BigInt count;
};

/// (x exponent, y exponent) of the class weight for one matrix.
std::pair<int, int> class_weight(const Asm& m, SymmetryClass c);

WeightedGF genfun(int n, SymmetryClass c, unsigned threads = 1);

}  // namespace asmsym
