#pragma once

// Alternating sign matrices, the eight symmetry classes, and the weight
// statistics attached to each class.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asmsym {

class Asm {
 public:
  Asm() = default;
  explicit Asm(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  Asm(int n, std::vector<std::int8_t> entries);

  static Asm identity(int n);
  static Asm anti_identity(int n);
  /// Rows given as strings over {'+', '-', '0'} or {'1', '-', '0'}.
  static Asm from_rows(const std::vector<std::string>& rows);

  int size() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::int8_t& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const std::int8_t> entries() const { return a_; }

  std::string to_string() const;

  auto operator<=>(const Asm&) const = default;
  bool operator==(const Asm&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> a_;
};

/// Row and column sums are 1 and nonzero entries alternate in sign.
bool is_asm(const Asm& m);

enum class SymmetryClass : int {
  Unrestricted = 1,  // no conditions
  Flip = 2,          // vertical axis: a_ij = a_{i,n-1-j}
  HalfTurn = 3,      // a_ij = a_{n-1-i,n-1-j}
  Transpose = 4,     // a_ij = a_ji
  QuarterTurn = 5,   // a_ij = a_{j,n-1-i}
  Plus = 6,          // vertical and horizontal axes
  Diagonals = 7,     // both diagonals
  Full = 8,          // all symmetries of the square
};

inline constexpr SymmetryClass kAllClasses[] = {
    SymmetryClass::Unrestricted, SymmetryClass::Flip,        SymmetryClass::HalfTurn,
    SymmetryClass::Transpose,    SymmetryClass::QuarterTurn, SymmetryClass::Plus,
    SymmetryClass::Diagonals,    SymmetryClass::Full};

inline int class_id(SymmetryClass c) { return static_cast<int>(c); }
SymmetryClass class_from_id(int id);
std::string_view class_mnemonic(SymmetryClass c);
/// Accepts "1".."8" or a mnemonic (all, flip, half-turn, transpose,
/// quarter-turn, plus, diagonals, full).
std::optional<SymmetryClass> parse_class(std::string_view text);

/// Whether the class can contain n x n matrices at all. Flip, Plus and Full
/// need odd n; QuarterTurn is empty for n = 2 mod 4.
bool exists_by_parity(SymmetryClass c, int n);

bool is_invariant(const Asm& m, SymmetryClass c);

class InvalidOrbitCount : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidSymmetry : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

int stat_minus_ones(const Asm& m);

/// Column of the unique 1 in the top row.
int stat_top_row_pos(const Asm& m);

/// Orbits of -1 entries under the half turn. The centre cell of an odd
/// matrix is its own orbit.
int stat_halfturn_orbits(const Asm& m);

/// Orbits of -1 entries under the quarter turn.
int stat_quarterturn_orbits(const Asm& m);

/// Number of -1 entries left of the middle column (odd n, flip symmetric).
/// Throws InvalidSymmetry if the middle column is not (+1, -1, +1, ...).
int stat_flip_left_minus(const Asm& m);

/// Number of -1 entries in the top-left quadrant (odd n, plus symmetric).
/// Throws InvalidSymmetry if the middle row and column are not alternating.
int stat_quadrant_minus(const Asm& m);

}  // namespace asmsym
