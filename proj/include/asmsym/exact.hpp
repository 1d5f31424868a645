#pragma once

// Exact scalar arithmetic: big integers, rationals and the combinatorial
// factors (generalized binomials, rising factorials, Andrews' Delta_k)
// used by the determinant generating functions.

#include <gmpxx.h>

#include <string>

namespace asmsym {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Generalized binomial coefficient: 0 when b < 0, otherwise
/// a(a-1)...(a-b+1)/b!. The upper argument may be negative.
BigInt binom(long a, long b);

/// Rising factorial (x)_j = x(x+1)...(x+j-1), with (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned j);

/// The factor Delta_k(mu) from Andrews' product formula for Z_n(1,1,mu).
/// Callers pass 2*mu, not mu, when forming that product.
Rational delta(unsigned k, const Rational& mu);

BigInt pow_int(long base, unsigned exp);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Parses "p" or "p/q" (optional sign).
Rational parse_rational(const std::string& text);

}  // namespace asmsym
