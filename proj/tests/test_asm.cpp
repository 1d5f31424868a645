#include "asmsym/asm.hpp"

#include <doctest.h>

using namespace asmsym;

namespace {

const Asm kCentreMinus = Asm::from_rows({"0+0", "+-+", "0+0"});

}  // namespace

TEST_CASE("construction from rows") {
  const Asm a = Asm::from_rows({"010", "1-1", "010"});
  CHECK(a == kCentreMinus);
  CHECK(a(1, 1) == -1);
  CHECK(a.size() == 3);
  CHECK(Asm::identity(3) == Asm::from_rows({"+00", "0+0", "00+"}));
  CHECK(Asm::anti_identity(2) == Asm::from_rows({"0+", "+0"}));
  CHECK_THROWS_AS(Asm::from_rows({"+0", "0"}), std::invalid_argument);
  CHECK_THROWS_AS(Asm::from_rows({"+x", "0+"}), std::invalid_argument);
  CHECK_THROWS_AS(Asm(2, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("ASM axioms") {
  CHECK(is_asm(Asm::identity(5)));
  CHECK(is_asm(kCentreMinus));
  CHECK(is_asm(Asm::from_rows({"0+00", "+-+0", "0+-+", "00+0"})));
  CHECK_FALSE(is_asm(Asm::from_rows({"++", "00"})));
  CHECK_FALSE(is_asm(Asm::from_rows({"0+0", "+0+", "0-0"})));
  // Row and column sums are 1 but the -1 in the first column comes first.
  CHECK_FALSE(is_asm(Asm::from_rows({"-++", "+00", "+00"})));
}

TEST_CASE("class ids and names") {
  for (int id = 1; id <= 8; ++id) {
    const SymmetryClass c = class_from_id(id);
    CHECK(class_id(c) == id);
    CHECK(parse_class(std::to_string(id)) == c);
    CHECK(parse_class(class_mnemonic(c)) == c);
  }
  CHECK(parse_class("quarter-turn") == SymmetryClass::QuarterTurn);
  CHECK_FALSE(parse_class("9").has_value());
  CHECK_FALSE(parse_class("rotate").has_value());
  CHECK_THROWS_AS(class_from_id(0), std::invalid_argument);
}

TEST_CASE("parity rules") {
  CHECK(exists_by_parity(SymmetryClass::Unrestricted, 4));
  CHECK_FALSE(exists_by_parity(SymmetryClass::Flip, 4));
  CHECK(exists_by_parity(SymmetryClass::Flip, 5));
  CHECK_FALSE(exists_by_parity(SymmetryClass::QuarterTurn, 6));
  CHECK(exists_by_parity(SymmetryClass::QuarterTurn, 8));
  CHECK_FALSE(exists_by_parity(SymmetryClass::Full, 2));
  CHECK_FALSE(exists_by_parity(SymmetryClass::HalfTurn, 0));
}

TEST_CASE("invariance predicates") {
  for (SymmetryClass c : kAllClasses) CHECK(is_invariant(kCentreMinus, c));
  const Asm id = Asm::identity(4);
  CHECK(is_invariant(id, SymmetryClass::HalfTurn));
  CHECK(is_invariant(id, SymmetryClass::Transpose));
  CHECK(is_invariant(id, SymmetryClass::Diagonals));
  CHECK_FALSE(is_invariant(id, SymmetryClass::QuarterTurn));
  CHECK_FALSE(is_invariant(id, SymmetryClass::Flip));
  const Asm skew = Asm::from_rows({"0+0", "00+", "+00"});
  CHECK(is_invariant(skew, SymmetryClass::Unrestricted));
  CHECK_FALSE(is_invariant(skew, SymmetryClass::Transpose));
  CHECK_FALSE(is_invariant(skew, SymmetryClass::HalfTurn));
}

TEST_CASE("statistics") {
  CHECK(stat_minus_ones(Asm::identity(4)) == 0);
  CHECK(stat_minus_ones(kCentreMinus) == 1);
  CHECK(stat_top_row_pos(Asm::identity(6)) == 0);
  CHECK(stat_top_row_pos(Asm::anti_identity(6)) == 5);
  CHECK(stat_halfturn_orbits(Asm::identity(3)) == 0);
  CHECK(stat_halfturn_orbits(kCentreMinus) == 1);
  CHECK(stat_quarterturn_orbits(Asm::identity(1)) == 0);
  CHECK(stat_quarterturn_orbits(kCentreMinus) == 1);
  CHECK(stat_flip_left_minus(Asm::identity(1)) == 0);
  CHECK(stat_flip_left_minus(kCentreMinus) == 0);
  CHECK(stat_quadrant_minus(kCentreMinus) == 0);

  // Half turn with -1 entries at (1,1) and (2,2): one orbit of size two.
  const Asm pair = Asm::from_rows({"0+00", "+-+0", "0+-+", "00+0"});
  CHECK(stat_halfturn_orbits(pair) == 1);
  // Four -1 entries around the centre: two half-turn orbits, one quarter-turn orbit.
  const Asm odd = Asm::from_rows({"00+00", "0+-+0", "+-+-+", "0+-+0", "00+00"});
  CHECK(is_asm(odd));
  CHECK(stat_halfturn_orbits(odd) == 2);
  CHECK(stat_quarterturn_orbits(odd) == 1);
  CHECK(stat_flip_left_minus(odd) == 1);
  CHECK(stat_quadrant_minus(odd) == 0);
  // Centre -1 with two more on the diagonal: 2l + 1 = 3 gives l + 1 = 2.
  const Asm three = Asm::from_rows({"0+000", "+-+00", "0+-+0", "00+-+", "000+0"});
  CHECK(is_asm(three));
  CHECK(is_invariant(three, SymmetryClass::HalfTurn));
  CHECK(stat_halfturn_orbits(three) == 2);
}

TEST_CASE("statistics reject matrices outside their class") {
  CHECK_THROWS_AS(stat_quarterturn_orbits(Asm::from_rows({"0+00", "+-+0", "0+-+", "00+0"})), InvalidOrbitCount);
  CHECK_THROWS_AS(stat_flip_left_minus(Asm::identity(4)), InvalidSymmetry);
  CHECK_THROWS_AS(stat_flip_left_minus(Asm::identity(3)), InvalidSymmetry);
  CHECK_THROWS_AS(stat_quadrant_minus(Asm::identity(3)), InvalidSymmetry);
  CHECK_THROWS_AS(stat_quadrant_minus(Asm::identity(2)), InvalidSymmetry);
}
