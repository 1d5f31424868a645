#include "asmsym/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asmsym {

BiPoly::BiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

BiPoly::BiPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

BiPoly BiPoly::term(const BigInt& c, unsigned ex, unsigned ey) {
  BiPoly p;
  p.add_term(c, ex, ey);
  return p;
}

BigInt BiPoly::coeff(unsigned ex, unsigned ey) const {
  auto it = terms_.find(Monomial{ex, ey});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.ex));
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.ey));
  return d;
}

void BiPoly::add_term(const BigInt& c, unsigned ex, unsigned ey) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{ex, ey}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m.ex, m.ey);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m.ex, m.ey);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  BigInt prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(prod, ma.ex + mb.ex, ma.ey + mb.ey);
    }
  }
  return r;
}

BiPoly operator-(BiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

BiPoly pow(const BiPoly& base, unsigned exp) {
  BiPoly r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::optional<BiPoly> try_divexact(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& [lead_m, lead_c] = den.leading();
  BiPoly rem = num;
  BiPoly quot;
  BigInt qc;
  BigInt neg;
  while (!rem.is_zero()) {
    const auto [m, c] = rem.leading();
    if (m.ex < lead_m.ex || m.ey < lead_m.ey) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
    const unsigned qx = m.ex - lead_m.ex;
    const unsigned qy = m.ey - lead_m.ey;
    quot.add_term(qc, qx, qy);
    for (const auto& [dm, dc] : den.terms()) {
      neg = -qc * dc;
      rem.add_term(neg, dm.ex + qx, dm.ey + qy);
    }
  }
  return quot;
}

BiPoly divexact(const BiPoly& num, const BiPoly& den) {
  auto q = try_divexact(num, den);
  if (!q) {
    throw InexactDivision("(" + to_string(num) + ") is not divisible by (" + to_string(den) + ")");
  }
  return *std::move(q);
}

namespace {

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Rational eval(const BiPoly& p, const Rational& x0, const Rational& y0) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) acc += Rational(c) * rational_pow(x0, m.ex) * rational_pow(y0, m.ey);
  return acc;
}

BiPoly subs_x(const BiPoly& p, const BigInt& x0) {
  BiPoly r;
  BigInt pw;
  for (const auto& [m, c] : p.terms()) {
    mpz_pow_ui(pw.get_mpz_t(), x0.get_mpz_t(), m.ex);
    r.add_term(c * pw, 0, m.ey);
  }
  return r;
}

BiPoly subs_y(const BiPoly& p, const BigInt& y0) {
  BiPoly r;
  BigInt pw;
  for (const auto& [m, c] : p.terms()) {
    mpz_pow_ui(pw.get_mpz_t(), y0.get_mpz_t(), m.ey);
    r.add_term(c * pw, m.ex, 0);
  }
  return r;
}

BiPoly y_coefficient(const BiPoly& p, unsigned s) {
  BiPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.ey == s) r.add_term(c, m.ex, 0);
  }
  return r;
}

bool is_palindromic_in_y(const BiPoly& p) {
  const int d = p.deg_y();
  for (const auto& [m, c] : p.terms()) {
    if (p.coeff(m.ex, static_cast<unsigned>(d) - m.ey) != c) return false;
  }
  return true;
}

namespace {

void append_monomial(std::string& out, const Monomial& m) {
  auto var = [&](char v, unsigned e) {
    if (e == 0) return;
    if (!out.empty() && out.back() != ' ' && out.back() != '-' && out.back() != '(') out += '*';
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var('x', m.ex);
  var('y', m.ey);
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigInt mag = abs(c);
    if (m.degree() == 0 || mag != 1) out += mag.get_str();
    append_monomial(out, m);
  }
  return out;
}

std::string to_grouped_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  const int dy = p.deg_y();
  int groups = 0;
  for (int s = 0; s <= dy; ++s) groups += y_coefficient(p, s).is_zero() ? 0 : 1;
  std::string out;
  for (int s = 0; s <= dy; ++s) {
    const BiPoly c = y_coefficient(p, static_cast<unsigned>(s));
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string body = to_string(c);
    if (s == 0) {
      out += (c.size() > 1 && groups > 1) ? "(" + body + ")" : body;
      continue;
    }
    if (c.size() > 1) {
      out += "(" + body + ")*";
    } else if (body != "1") {
      out += body == "-1" ? "-" : body + "*";
    }
    out += "y";
    if (s > 1) out += "^" + std::to_string(s);
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BiPoly parse() {
    BiPoly r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BiPoly expr() {
    BiPoly acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    BiPoly t = term();
    acc += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      negate = text_[pos_++] == '-';
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  unsigned long number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  BiPoly factor() {
    BiPoly base;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (c == 'x' || c == 'y') {
      ++pos_;
      base = c == 'x' ? BiPoly::x() : BiPoly::y();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      base = BiPoly(BigInt(std::string(text_.substr(start, pos_ - start))));
    } else {
      fail("expected a factor");
    }
    if (peek() == '^') {
      ++pos_;
      return pow(base, static_cast<unsigned>(number()));
    }
    return base;
  }
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return Parser(text).parse(); }

nlohmann::json to_json(const BiPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({m.ex, m.ey, c.get_str()});
  return arr;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of triples");
  BiPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term must be [ex, ey, coeff]");
    p.add_term(BigInt(t[2].get<std::string>()), t[0].get<unsigned>(), t[1].get<unsigned>());
  }
  return p;
}

}  // namespace asmsym
