#include "asmsym/detgen.hpp"

#include <doctest.h>

using namespace asmsym;

namespace {

// Laplace expansion along the first row.
BiPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BiPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const BiPoly term = m(0, col) * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

PolyMatrix from_text(const std::vector<std::vector<const char*>>& rows) {
  PolyMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = parse_bipoly(rows[i][j]);
  }
  return m;
}

}  // namespace

TEST_CASE("Bareiss agrees with cofactor expansion") {
  for (int mu = 0; mu <= 2; ++mu) {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CAPTURE(mu);
      CHECK(det(build_z_matrix(n, mu)) == cofactor_det(build_z_matrix(n, mu)));
      CHECK(det(build_t_matrix(n, mu)) == cofactor_det(build_t_matrix(n, mu)));
      if (n <= 4) CHECK(det(build_r_matrix(n, mu)) == cofactor_det(build_r_matrix(n, mu)));
    }
  }
  const PolyMatrix needs_pivot = from_text({{"0", "x", "1"}, {"y", "0", "2"}, {"1", "1", "x+y"}});
  CHECK(det(needs_pivot) == cofactor_det(needs_pivot));
}

TEST_CASE("determinant properties") {
  const PolyMatrix repeated = from_text({{"1+x", "y", "2"}, {"1+x", "y", "2"}, {"x", "x*y", "3"}});
  CHECK(det(repeated) == BiPoly());
  const PolyMatrix zero_column = from_text({{"0", "y", "2"}, {"0", "x", "1"}, {"0", "1", "3"}});
  CHECK(det(zero_column) == BiPoly());

  const PolyMatrix a = from_text({{"x", "1"}, {"y", "2+x"}});
  const PolyMatrix b = from_text({{"1+y", "x", "0"}, {"1", "y", "x"}, {"2", "0", "1"}});
  PolyMatrix block(5);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) block(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) block(i + 2, j + 2) = b(i, j);
  }
  block(3, 0) = parse_bipoly("x^2");
  CHECK(det(block) == det(a) * det(b));
  CHECK(det(PolyMatrix()) == BiPoly(1));
}

TEST_CASE("y coefficient") {
  CHECK(y_coef(0, 1, 0) == 2);
  CHECK(y_coef(0, 0, 0) == 1);
  CHECK(y_coef(1, 3, 0) == 2);
  CHECK(y_coef(1, 2, 1) == binom(2, 2) + binom(3, 2));
  CHECK(y_coef(2, 0, 0) == 0);
}

TEST_CASE("displayed table rows") {
  CHECK(z_poly(1, 0) == parse_bipoly("1+y"));
  CHECK(z_poly(2, 0) == parse_bipoly("2 + xy + 2y^2"));
  CHECK(z_poly(3, 0) == parse_bipoly("(4+x) + (4x+x^2)y + (4x+x^2)y^2 + (4+x)y^3"));
  CHECK(z_poly(2, 1) == parse_bipoly("2 + (x+2)y + 2y^2"));
  CHECK(z_poly(3, 1) == parse_bipoly("(6+x) + (6+7x+x^2)y + (6+7x+x^2)y^2 + (6+x)y^3"));
  CHECK(y_coefficient(z_poly(4, 0), 0) == parse_bipoly("8+10x+2x^2"));
  CHECK(y_coefficient(z_poly(4, 1), 2) == parse_bipoly("24+64x+38x^2+8x^3+x^4"));
  CHECK(t_poly(3, 0) == parse_bipoly("1+5x+4x^2+x^3"));
  CHECK(t_poly(4, 1) == parse_bipoly("24+136x+234x^2+176x^3+63x^4+12x^5+x^6"));
  CHECK(r_poly(1, 0) == parse_bipoly("4+x"));
  CHECK(r_poly(2, 1) == parse_bipoly("60+70x+12x^2+x^3"));
}

TEST_CASE("Z is palindromic in y") {
  for (int mu = 0; mu <= 1; ++mu) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(is_palindromic_in_y(z_poly(n, mu)));
    }
  }
}

TEST_CASE("Z at y = 1 factors into T and R") {
  for (int mu = 0; mu <= 2; ++mu) {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CAPTURE(mu);
      CHECK(subs_y(z_poly(2 * n, mu), 1) == t_poly(n, mu) * r_poly(n, mu));
      CHECK(subs_y(z_poly(2 * n + 1, mu), 1) == 2 * t_poly(n + 1, mu) * r_poly(n, mu));
    }
  }
}

TEST_CASE("size zero conventions and bad sizes") {
  CHECK(z_poly(0, 0) == BiPoly(1));
  CHECK(t_poly(0, 1) == BiPoly(1));
  CHECK(r_poly(0, 2) == BiPoly(1));
  CHECK_THROWS_AS(build_z_matrix(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_t_matrix(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_r_matrix(0, 1), std::invalid_argument);
}
