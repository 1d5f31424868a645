#pragma once

// Sparse bivariate polynomials in x and y with big-integer coefficients.
//
// Terms are kept in graded-lex order: ascending total degree, and within a
// degree, descending power of x. Rendering and serialization follow this
// order, so equal polynomials always print identically.

#include "asmsym/exact.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace asmsym {

struct Monomial {
  unsigned ex = 0;
  unsigned ey = 0;

  unsigned degree() const { return ex + ey; }
  bool operator==(const Monomial&) const = default;
};

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.ex > b.ex;
  }
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BiPoly {
 public:
  using Terms = std::map<Monomial, BigInt, GradedLex>;

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  BiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static BiPoly term(const BigInt& c, unsigned ex, unsigned ey);
  static BiPoly x() { return term(1, 1, 0); }
  static BiPoly y() { return term(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(unsigned ex, unsigned ey) const;
  /// Largest stored exponent; -1 for the zero polynomial.
  int deg_x() const;
  int deg_y() const;
  /// Greatest term in graded-lex order. Precondition: nonzero.
  const Terms::value_type& leading() const { return *terms_.rbegin(); }

  /// Adds c*x^ex*y^ey, pruning a coefficient that cancels to zero.
  void add_term(const BigInt& c, unsigned ex, unsigned ey);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

BiPoly pow(const BiPoly& base, unsigned exp);

/// Exact quotient num/den. Throws InexactDivision when den does not divide
/// num in Z[x,y], DivisionByZero when den is zero.
BiPoly divexact(const BiPoly& num, const BiPoly& den);
std::optional<BiPoly> try_divexact(const BiPoly& num, const BiPoly& den);

Rational eval(const BiPoly& p, const Rational& x0, const Rational& y0);

/// Substitutes an integer for x (result is a polynomial in y only), or for y.
BiPoly subs_x(const BiPoly& p, const BigInt& x0);
BiPoly subs_y(const BiPoly& p, const BigInt& y0);

/// Coefficient of y^s, as a polynomial in x.
BiPoly y_coefficient(const BiPoly& p, unsigned s);

/// True when the coefficients of y^s and y^(deg_y - s) agree for every s.
bool is_palindromic_in_y(const BiPoly& p);

/// Canonical text, e.g. "2 + x*y + 2*y^2".
std::string to_string(const BiPoly& p);

/// Rendering grouped by powers of y, e.g. "(4 + x) + (4*x + x^2)*y".
std::string to_grouped_string(const BiPoly& p);

/// Parses polynomial expressions built from integers, x, y, +, -, *, ^ and
/// parentheses. Juxtaposition multiplies, so "4x^2y" and "(1+x)y" parse.
BiPoly parse_bipoly(std::string_view text);

/// Canonical JSON: array of [ex, ey, "coefficient"] triples in graded-lex order.
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace asmsym
