#include "asmsym/exact.hpp"

#include <stdexcept>

namespace asmsym {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binom(long a, long b) {
  if (b < 0) return 0;
  BigInt result;
  BigInt upper = a;
  // mpz_bin_ui handles negative upper arguments via
  // binom(-n, k) = (-1)^k binom(n + k - 1, k).
  mpz_bin_ui(result.get_mpz_t(), upper.get_mpz_t(), static_cast<unsigned long>(b));
  return result;
}

Rational pochhammer(const Rational& x, unsigned j) {
  Rational acc = 1;
  for (unsigned i = 0; i < j; ++i) acc *= x + i;
  return acc;
}

Rational delta(unsigned k, const Rational& mu) {
  if (k == 0) return 2;
  const Rational half_mu = mu / 2;
  if (k % 2 == 0) {
    const unsigned j = k / 2;
    Rational num = pochhammer(mu + 2 * j + 2, j) *
                   pochhammer(half_mu + 2 * j + Rational(3, 2), j - 1);
    Rational den = pochhammer(Rational(j), j) *
                   pochhammer(half_mu + j + Rational(3, 2), j - 1);
    return num / den;
  }
  const unsigned j = (k + 1) / 2;
  Rational num = pochhammer(mu + 2 * j, j - 1) *
                 pochhammer(half_mu + 2 * j + Rational(1, 2), j);
  Rational den = pochhammer(Rational(j), j) *
                 pochhammer(half_mu + j + Rational(1, 2), j - 1);
  return num / den;
}

BigInt pow_int(long base, unsigned exp) {
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

}  // namespace asmsym
