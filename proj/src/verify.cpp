#include "asmsym/verify.hpp"

#include "asmsym/plane_partitions.hpp"

#include <functional>
#include <sstream>

namespace asmsym {

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

nlohmann::json to_json(const Value& v) {
  if (const auto* p = std::get_if<BiPoly>(&v)) return to_json(*p);
  return to_string(std::get<Rational>(v));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Unequal: return "Unequal";
    case Verdict::Extracted: return "Extracted";
  }
  return "?";
}

bool VerdictReport::proved() const { return id.starts_with("thm-") || id.starts_with("oracle-"); }

nlohmann::json to_json(const VerdictReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::json j = {{"id", r.id},
                      {"params", params},
                      {"verdict", verdict_name(r.verdict)},
                      {"lhs", to_json(r.lhs)},
                      {"rhs", to_json(r.rhs)}};
  if (r.quotient) j["quotient"] = to_json(*r.quotient);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string to_text(const VerdictReport& r) {
  std::ostringstream out;
  out << r.id;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << ": " << verdict_name(r.verdict) << "  lhs = " << to_string(r.lhs) << "  rhs = " << to_string(r.rhs);
  if (r.quotient) out << "  quotient = " << to_string(*r.quotient);
  if (!r.note.empty()) out << "  (" << r.note << ')';
  return out.str();
}

const std::vector<IdentityInfo>& identity_catalogue() {
  static const std::vector<IdentityInfo> catalogue = {
      {"thm-det-factor-even", "Z_{2n}(x,1,mu) = T_n(x,mu) R_n(x,mu)"},
      {"thm-det-factor-odd", "Z_{2n+1}(x,1,mu) = 2 T_{n+1}(x,mu) R_n(x,mu)"},
      {"thm-det-product", "Z_n(1,1,mu) = prod_{k<n} Delta_k(2mu)"},
      {"thm-tri-product", "T_n(1,mu) = 2^-n prod_{k<n} Delta_{2k}(2mu)"},
      {"thm-half-turn-x2-4n", "H_{4n}(2,1) / H_{4n-2}(2,1) = 2^{2n-1} C(4n,2n) / C(2n,n)"},
      {"thm-half-turn-x2-4n+2", "H_{4n+2}(2,1) / H_{4n}(2,1) = 2^{2n+1} C(4n,2n) / C(2n,n)"},
      {"thm-half-turn-x2-odd", "H_{2n+1}(2,1) = 2^n H_{2n}(2,1)"},
      {"oracle-z-shifted-pp", "shifted plane partitions in ZZ_n(mu) weighted x^special y^max = Z_n(x,y,mu)"},
      {"oracle-t-tri-array", "triangular arrays in TT_n(mu) weighted x^special = T_n(x,mu)"},
      {"conj-all-z", "A_n(x,y) = Z_{n-1}(x,y,1)"},
      {"conj-flip-t", "F_{2n+1}(x) = T_n(x,1)"},
      {"conj-half-turn-even-z", "H_{2n}(x,y) = Z_n(x,y,0) Z_{n-1}(x,y,1)"},
      {"conj-half-turn-odd-4n+1", "H_{4n+1}(x,1) = R_n(x,0) T_n(x,1) S_{4n+1}(x)"},
      {"conj-half-turn-odd-4n-1", "H_{4n-1}(x,1) = R_{n-1}(x,1) T_n(x,0) S_{4n-1}(x)"},
      {"conj-all-at-3", "A_n(3,1) = 3^{deg A_n(x,1)} H_n(1,1)"},
      {"conj-quarter-turn-y-4n", "Q_{4n}(1,y) = y H_{2n}(1,y) A_n(1,y)^2"},
      {"conj-quarter-turn-y-4n+1", "Q_{4n+1}(1,y) = y H_{2n+1}(1,y) A_n(1,y)^2"},
      {"conj-quarter-turn-y-4n-1", "Q_{4n-1}(1,y) = y H_{2n-1}(1,y) A_n(1,y)^2"},
      {"conj-quarter-turn-w", "Q_{2n+1}(x,1) = w_n(x) w_{n+1}(x) (n even), x w_n(x) w_{n+1}(x) (n odd)"},
      {"conj-quarter-turn-v", "Q_{4n}(x,1) = v_n(x) w_{2n}(x), v_n with nonnegative coefficients"},
      {"conj-scc-w", "SC-CSPPs in [1,2m]^3 weighted x^special = x^m w_{2m}(x)"},
      {"conj-plus-4n+1", "P_{4n+1}(x) = T_n(x,1) T_n(x,0)"},
      {"conj-plus-4n-1", "P_{4n-1}(x) = T_{n-1}(x,1) T_n(x,0)"},
      {"ratio-all", "A_{n+1} / A_n = C(3n+1,n) / C(2n,n)"},
      {"ratio-flip", "F_{2n+1} / F_{2n-1} = C(6n-2,2n) / (2 C(4n-1,2n))"},
      {"ratio-half-turn-odd", "H_{2n+1} / H_{2n} = C(3n,n) / C(2n,n)"},
      {"ratio-half-turn-even", "H_{2n} / H_{2n-1} = 4 C(3n,n) / (3 C(2n,n))"},
      {"ratio-quarter-turn-4n", "Q_{4n} = H_{2n} A_n^2"},
      {"ratio-quarter-turn-4n+1", "Q_{4n+1} = H_{2n+1} A_n^2"},
      {"ratio-quarter-turn-4n-1", "Q_{4n-1} = H_{2n-1} A_n^2"},
      {"ratio-plus-4n+1", "P_{4n+1} / P_{4n-1} = (3n-1) C(6n-3,2n-1) / ((4n-1) C(4n-2,2n-1))"},
      {"ratio-plus-4n+3", "P_{4n+3} / P_{4n+1} = (3n+1) C(6n,2n) / ((4n+1) C(4n,2n))"},
      {"ratio-diagonals", "X_{2n+1} / X_{2n-1} = C(3n,n) / C(2n-1,n)"},
  };
  return catalogue;
}

namespace {

using Params = std::vector<std::pair<std::string, long>>;

constexpr auto kAll = SymmetryClass::Unrestricted;
constexpr auto kFlip = SymmetryClass::Flip;
constexpr auto kHalf = SymmetryClass::HalfTurn;
constexpr auto kQuarter = SymmetryClass::QuarterTurn;
constexpr auto kPlus = SymmetryClass::Plus;
constexpr auto kDiagonals = SymmetryClass::Diagonals;

bool same(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<BiPoly>(&a)) return *p == std::get<BiPoly>(b);
  return std::get<Rational>(a) == std::get<Rational>(b);
}

VerdictReport compare(std::string id, Params params, Value lhs, Value rhs, std::string note = {}) {
  VerdictReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.verdict = same(lhs, rhs) ? Verdict::Equal : Verdict::Unequal;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.note = std::move(note);
  return r;
}

VerdictReport divide(std::string id, Params params, const BiPoly& dividend, const BiPoly& divisor) {
  VerdictReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.lhs = dividend;
  r.rhs = divisor;
  if (auto q = try_divexact(dividend, divisor)) {
    r.verdict = Verdict::Extracted;
    r.quotient = std::move(*q);
  } else {
    r.verdict = Verdict::Unequal;
    r.note = "inexact division";
  }
  return r;
}

Rational ratio(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

BiPoly at_y1(const BiPoly& p) { return subs_y(p, 1); }
BiPoly at_x1(const BiPoly& p) { return subs_x(p, 1); }

Rational count_ratio(DataStore& data, SymmetryClass c, int num_size, int den_size) {
  return ratio(data.count(c, num_size), data.count(c, den_size));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

VerdictReport check_det_factor_even(DataStore& data, int n, int mu) {
  require(n >= 0 && mu >= 0, "det factor check needs n, mu >= 0");
  return compare("thm-det-factor-even", {{"n", n}, {"mu", mu}}, at_y1(data.z(2 * n, mu)), data.t(n, mu) * data.r(n, mu));
}

VerdictReport check_det_factor_odd(DataStore& data, int n, int mu) {
  require(n >= 0 && mu >= 0, "det factor check needs n, mu >= 0");
  return compare("thm-det-factor-odd", {{"n", n}, {"mu", mu}}, at_y1(data.z(2 * n + 1, mu)),
                 BiPoly(2) * data.t(n + 1, mu) * data.r(n, mu));
}

VerdictReport check_det_product(DataStore& data, int n, int mu) {
  require(n >= 1 && mu >= 0, "product check needs n >= 1, mu >= 0");
  Rational product = 1;
  for (int k = 0; k < n; ++k) product *= delta(static_cast<unsigned>(k), Rational(2 * mu));
  return compare("thm-det-product", {{"n", n}, {"mu", mu}}, eval(data.z(n, mu), 1, 1), product);
}

VerdictReport check_tri_product(DataStore& data, int n, int mu) {
  require(n >= 1 && mu >= 0, "product check needs n >= 1, mu >= 0");
  Rational product = 1;
  for (int k = 0; k < n; ++k) product *= delta(static_cast<unsigned>(2 * k), Rational(2 * mu));
  product /= Rational(pow_int(2, static_cast<unsigned>(n)));
  return compare("thm-tri-product", {{"n", n}, {"mu", mu}}, eval(data.t(n, mu), 1, 1), product);
}

namespace {

Rational half_turn_at_2(DataStore& data, int size) { return eval(data.poly(kHalf, size), 2, 1); }

Rational central_ratio(int n) {
  return ratio(binom(4L * n, 2L * n), binom(2L * n, n));
}

}  // namespace

VerdictReport check_half_turn_x2_4n(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  const Rational lhs = half_turn_at_2(data, 4 * n) / half_turn_at_2(data, 4 * n - 2);
  const Rational rhs = Rational(pow_int(2, static_cast<unsigned>(2 * n - 1))) * central_ratio(n);
  return compare("thm-half-turn-x2-4n", {{"n", n}}, lhs, rhs);
}

VerdictReport check_half_turn_x2_4n_plus_2(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  const Rational lhs = half_turn_at_2(data, 4 * n + 2) / half_turn_at_2(data, 4 * n);
  const Rational rhs = Rational(pow_int(2, static_cast<unsigned>(2 * n + 1))) * central_ratio(n);
  return compare("thm-half-turn-x2-4n+2", {{"n", n}}, lhs, rhs);
}

VerdictReport check_half_turn_x2_odd(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("thm-half-turn-x2-odd", {{"n", n}}, half_turn_at_2(data, 2 * n + 1),
                 Rational(Rational(pow_int(2, static_cast<unsigned>(n))) * half_turn_at_2(data, 2 * n)));
}

VerdictReport check_oracle_shifted_pp(DataStore& data, int n, int mu) {
  return compare("oracle-z-shifted-pp", {{"n", n}, {"mu", mu}}, enum_shifted_pp(n, mu), data.z(n, mu));
}

VerdictReport check_oracle_tri_array(DataStore& data, int n, int mu) {
  return compare("oracle-t-tri-array", {{"n", n}, {"mu", mu}}, enum_tri_array(n, mu), data.t(n, mu));
}

VerdictReport check_all_vs_z(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("conj-all-z", {{"n", n}}, data.poly(kAll, n), data.z(n - 1, 1));
}

VerdictReport check_flip_vs_t(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("conj-flip-t", {{"n", n}}, data.poly(kFlip, 2 * n + 1), data.t(n, 1));
}

VerdictReport check_half_turn_even_vs_z(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("conj-half-turn-even-z", {{"n", n}}, data.poly(kHalf, 2 * n), data.z(n, 0) * data.z(n - 1, 1));
}

VerdictReport check_all_at_3(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  const BiPoly& all = data.poly(kAll, n);
  const int degree = at_y1(all).deg_x();
  const Rational rhs = Rational(pow_int(3, static_cast<unsigned>(degree))) * eval(data.poly(kHalf, n), 1, 1);
  return compare("conj-all-at-3", {{"n", n}}, eval(all, 3, 1), rhs);
}

VerdictReport check_quarter_turn_y(DataStore& data, int n, int offset) {
  require(n >= 1 && offset >= -1 && offset <= 1, "needs n >= 1 and offset in {-1,0,1}");
  static const char* const ids[] = {"conj-quarter-turn-y-4n-1", "conj-quarter-turn-y-4n", "conj-quarter-turn-y-4n+1"};
  const BiPoly lhs = at_x1(data.poly(kQuarter, 4 * n + offset));
  const BiPoly rhs = BiPoly::y() * at_x1(data.poly(kHalf, 2 * n + offset)) * pow(at_x1(data.poly(kAll, n)), 2);
  return compare(ids[offset + 1], {{"n", n}}, lhs, rhs, offset == 0 ? "H_{2n}(1,y,0) read as H_{2n}(1,y)" : "");
}

VerdictReport check_plus(DataStore& data, int n, int offset) {
  require(n >= 1 && (offset == 1 || offset == -1), "needs n >= 1 and offset in {-1,1}");
  if (offset == 1) {
    return compare("conj-plus-4n+1", {{"n", n}}, data.poly(kPlus, 4 * n + 1), data.t(n, 1) * data.t(n, 0));
  }
  return compare("conj-plus-4n-1", {{"n", n}}, data.poly(kPlus, 4 * n - 1), data.t(n - 1, 1) * data.t(n, 0));
}

VerdictReport extract_half_turn_odd_factor(DataStore& data, int size) {
  require(size >= 1 && size % 2 == 1, "needs an odd size");
  const BiPoly dividend = at_y1(data.poly(kHalf, size));
  if (size % 4 == 1) {
    const int n = (size - 1) / 4;
    return divide("conj-half-turn-odd-4n+1", {{"n", n}, {"size", size}}, dividend, data.r(n, 0) * data.t(n, 1));
  }
  const int n = (size + 1) / 4;
  return divide("conj-half-turn-odd-4n-1", {{"n", n}, {"size", size}}, dividend, data.r(n - 1, 1) * data.t(n, 0));
}

QuarterTurnFactors extract_quarter_turn_factors(DataStore& data) {
  QuarterTurnFactors out;
  out.w = {BiPoly(1), BiPoly(1)};
  for (int n = 0; data.available(kQuarter, 2 * n + 1); ++n) {
    const BiPoly q = at_y1(data.poly(kQuarter, 2 * n + 1));
    if (n == 0) {
      out.reports.push_back(compare("conj-quarter-turn-w", {{"n", 0}}, q, out.w[0] * out.w[1]));
      if (out.reports.back().failed()) break;
      continue;
    }
    const BiPoly divisor = n % 2 == 1 ? BiPoly::x() * out.w[static_cast<std::size_t>(n)] : out.w[static_cast<std::size_t>(n)];
    out.reports.push_back(divide("conj-quarter-turn-w", {{"n", n}}, q, divisor));
    if (out.reports.back().failed()) break;
    out.w.push_back(*out.reports.back().quotient);
  }
  for (int n = 1; data.available(kQuarter, 4 * n) && out.w.size() > static_cast<std::size_t>(2 * n); ++n) {
    const BiPoly q = at_y1(data.poly(kQuarter, 4 * n));
    VerdictReport r = divide("conj-quarter-turn-v", {{"n", n}}, q, out.w[static_cast<std::size_t>(2 * n)]);
    if (r.quotient) {
      for (const auto& [mono, c] : r.quotient->terms()) {
        if (sgn(c) < 0) {
          r.verdict = Verdict::Unequal;
          r.note = "quotient has a negative coefficient";
          break;
        }
      }
    }
    out.reports.push_back(r);
    if (r.failed()) break;
    out.v.emplace(n, *r.quotient);
  }
  return out;
}

VerdictReport check_scc_vs_w(DataStore&, int m, const QuarterTurnFactors& factors) {
  require(m >= 0, "needs m >= 0");
  if (factors.w.size() <= static_cast<std::size_t>(2 * m)) {
    throw MissingData("w_" + std::to_string(2 * m) + " was not extracted");
  }
  return compare("conj-scc-w", {{"m", m}}, enum_sccpp(m),
                 BiPoly::term(1, static_cast<unsigned>(m), 0) * factors.w[static_cast<std::size_t>(2 * m)]);
}

VerdictReport check_ratio_all(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("ratio-all", {{"n", n}}, count_ratio(data, kAll, n + 1, n),
                 ratio(binom(3L * n + 1, n), binom(2L * n, n)));
}

VerdictReport check_ratio_flip(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("ratio-flip", {{"n", n}}, count_ratio(data, kFlip, 2 * n + 1, 2 * n - 1),
                 ratio(binom(6L * n - 2, 2L * n), 2 * binom(4L * n - 1, 2L * n)));
}

VerdictReport check_ratio_half_turn_odd(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("ratio-half-turn-odd", {{"n", n}}, count_ratio(data, kHalf, 2 * n + 1, 2 * n),
                 ratio(binom(3L * n, n), binom(2L * n, n)));
}

VerdictReport check_ratio_half_turn_even(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("ratio-half-turn-even", {{"n", n}}, count_ratio(data, kHalf, 2 * n, 2 * n - 1),
                 ratio(4 * binom(3L * n, n), 3 * binom(2L * n, n)));
}

VerdictReport check_product_quarter_turn(DataStore& data, int n, int offset) {
  require(n >= 1 && offset >= -1 && offset <= 1, "needs n >= 1 and offset in {-1,0,1}");
  static const char* const ids[] = {"ratio-quarter-turn-4n-1", "ratio-quarter-turn-4n", "ratio-quarter-turn-4n+1"};
  const BigInt all = data.count(kAll, n);
  return compare(ids[offset + 1], {{"n", n}}, Rational(data.count(kQuarter, 4 * n + offset)),
                 Rational(data.count(kHalf, 2 * n + offset) * all * all));
}

VerdictReport check_ratio_plus_4n_plus_1(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("ratio-plus-4n+1", {{"n", n}}, count_ratio(data, kPlus, 4 * n + 1, 4 * n - 1),
                 ratio((3 * n - 1) * binom(6L * n - 3, 2L * n - 1), (4 * n - 1) * binom(4L * n - 2, 2L * n - 1)));
}

VerdictReport check_ratio_plus_4n_plus_3(DataStore& data, int n) {
  require(n >= 0, "needs n >= 0");
  return compare("ratio-plus-4n+3", {{"n", n}}, count_ratio(data, kPlus, 4 * n + 3, 4 * n + 1),
                 ratio((3 * n + 1) * binom(6L * n, 2L * n), (4 * n + 1) * binom(4L * n, 2L * n)));
}

VerdictReport check_ratio_diagonals(DataStore& data, int n) {
  require(n >= 1, "needs n >= 1");
  return compare("ratio-diagonals", {{"n", n}}, count_ratio(data, kDiagonals, 2 * n + 1, 2 * n - 1),
                 ratio(binom(3L * n, n), binom(2L * n - 1, n)));
}

namespace {

using Need = std::vector<std::pair<SymmetryClass, int>>;

class SuiteRun {
 public:
  SuiteRun(DataStore& data, const SuiteOptions& options) : data_(data), options_(options) {}

  bool wants(std::string_view id) const { return id.starts_with(options_.id_prefix); }
  bool wants_n(long n) const { return !options_.n || *options_.n == n; }

  // Checks n = first, first+1, ... while every size named by needs(n) is
  // within the cutoffs.
  void sweep(std::string_view id, int first, const std::function<Need(int)>& needs,
             const std::function<VerdictReport(int)>& check) {
    if (!wants(id)) return;
    for (int n = first;; ++n) {
      bool ok = true;
      for (const auto& [c, size] : needs(n)) ok = ok && data_.available(c, size);
      if (!ok) break;
      if (wants_n(n)) out.push_back(check(n));
    }
  }

  // n in [first, last] crossed with every configured mu.
  void grid(std::string_view id, int first, int last, const std::function<VerdictReport(int, int)>& check) {
    if (!wants(id)) return;
    for (int n = first; n <= last; ++n) {
      if (!wants_n(n)) continue;
      for (int mu : options_.mus) out.push_back(check(n, mu));
    }
  }

  const QuarterTurnFactors& factors() {
    if (!factors_) factors_ = extract_quarter_turn_factors(data_);
    return *factors_;
  }

  void quarter_turn_factor_reports(std::string_view id) {
    if (!wants(id)) return;
    for (const auto& r : factors().reports) {
      if (r.id == id && wants_n(r.params.front().second)) out.push_back(r);
    }
  }

  std::vector<VerdictReport> out;

 private:
  DataStore& data_;
  const SuiteOptions& options_;
  std::optional<QuarterTurnFactors> factors_;
};

}  // namespace

std::vector<VerdictReport> run_suite(DataStore& data, const SuiteOptions& options) {
  SuiteRun run(data, options);
  auto& d = data;

  run.grid("thm-det-factor-even", 0, options.det_factor_max, [&](int n, int mu) { return check_det_factor_even(d, n, mu); });
  run.grid("thm-det-factor-odd", 0, options.det_factor_max, [&](int n, int mu) { return check_det_factor_odd(d, n, mu); });
  run.grid("thm-det-product", 1, options.det_product_max, [&](int n, int mu) { return check_det_product(d, n, mu); });
  run.grid("thm-tri-product", 1, options.tri_product_max, [&](int n, int mu) { return check_tri_product(d, n, mu); });
  run.sweep("thm-half-turn-x2-4n", 1, [](int n) { return Need{{kHalf, 4 * n}}; },
            [&](int n) { return check_half_turn_x2_4n(d, n); });
  run.sweep("thm-half-turn-x2-4n+2", 1, [](int n) { return Need{{kHalf, 4 * n + 2}}; },
            [&](int n) { return check_half_turn_x2_4n_plus_2(d, n); });
  run.sweep("thm-half-turn-x2-odd", 1, [](int n) { return Need{{kHalf, 2 * n + 1}}; },
            [&](int n) { return check_half_turn_x2_odd(d, n); });
  run.grid("oracle-z-shifted-pp", 0, options.oracle_max, [&](int n, int mu) { return check_oracle_shifted_pp(d, n, mu); });
  run.grid("oracle-t-tri-array", 1, options.oracle_max, [&](int n, int mu) { return check_oracle_tri_array(d, n, mu); });

  run.sweep("conj-all-z", 1, [](int n) { return Need{{kAll, n}}; }, [&](int n) { return check_all_vs_z(d, n); });
  run.sweep("conj-flip-t", 1, [](int n) { return Need{{kFlip, 2 * n + 1}}; }, [&](int n) { return check_flip_vs_t(d, n); });
  run.sweep("conj-half-turn-even-z", 1, [](int n) { return Need{{kHalf, 2 * n}}; },
            [&](int n) { return check_half_turn_even_vs_z(d, n); });
  run.sweep("conj-half-turn-odd-4n+1", 0, [](int n) { return Need{{kHalf, 4 * n + 1}}; },
            [&](int n) { return extract_half_turn_odd_factor(d, 4 * n + 1); });
  run.sweep("conj-half-turn-odd-4n-1", 1, [](int n) { return Need{{kHalf, 4 * n - 1}}; },
            [&](int n) { return extract_half_turn_odd_factor(d, 4 * n - 1); });
  run.sweep("conj-all-at-3", 1, [](int n) { return Need{{kAll, n}, {kHalf, n}}; },
            [&](int n) { return check_all_at_3(d, n); });
  for (int offset : {0, 1, -1}) {
    static const char* const ids[] = {"conj-quarter-turn-y-4n-1", "conj-quarter-turn-y-4n", "conj-quarter-turn-y-4n+1"};
    run.sweep(ids[offset + 1], 1,
              [offset](int n) { return Need{{kQuarter, 4 * n + offset}, {kHalf, 2 * n + offset}, {kAll, n}}; },
              [&d, offset](int n) { return check_quarter_turn_y(d, n, offset); });
  }
  run.quarter_turn_factor_reports("conj-quarter-turn-w");
  run.quarter_turn_factor_reports("conj-quarter-turn-v");
  if (run.wants("conj-scc-w")) {
    for (int m = 0; m <= options.scc_max; ++m) {
      if (run.factors().w.size() <= static_cast<std::size_t>(2 * m)) break;
      if (run.wants_n(m)) run.out.push_back(check_scc_vs_w(d, m, run.factors()));
    }
  }
  run.sweep("conj-plus-4n+1", 1, [](int n) { return Need{{kPlus, 4 * n + 1}}; }, [&](int n) { return check_plus(d, n, 1); });
  run.sweep("conj-plus-4n-1", 1, [](int n) { return Need{{kPlus, 4 * n - 1}}; }, [&](int n) { return check_plus(d, n, -1); });

  run.sweep("ratio-all", 1, [](int n) { return Need{{kAll, n + 1}}; }, [&](int n) { return check_ratio_all(d, n); });
  run.sweep("ratio-flip", 1, [](int n) { return Need{{kFlip, 2 * n + 1}}; }, [&](int n) { return check_ratio_flip(d, n); });
  run.sweep("ratio-half-turn-odd", 1, [](int n) { return Need{{kHalf, 2 * n + 1}}; },
            [&](int n) { return check_ratio_half_turn_odd(d, n); });
  run.sweep("ratio-half-turn-even", 1, [](int n) { return Need{{kHalf, 2 * n}}; },
            [&](int n) { return check_ratio_half_turn_even(d, n); });
  for (int offset : {0, 1, -1}) {
    static const char* const ids[] = {"ratio-quarter-turn-4n-1", "ratio-quarter-turn-4n", "ratio-quarter-turn-4n+1"};
    run.sweep(ids[offset + 1], 1,
              [offset](int n) { return Need{{kQuarter, 4 * n + offset}, {kHalf, 2 * n + offset}, {kAll, n}}; },
              [&d, offset](int n) { return check_product_quarter_turn(d, n, offset); });
  }
  run.sweep("ratio-plus-4n+1", 1, [](int n) { return Need{{kPlus, 4 * n + 1}}; },
            [&](int n) { return check_ratio_plus_4n_plus_1(d, n); });
  run.sweep("ratio-plus-4n+3", 0, [](int n) { return Need{{kPlus, 4 * n + 3}}; },
            [&](int n) { return check_ratio_plus_4n_plus_3(d, n); });
  run.sweep("ratio-diagonals", 1, [](int n) { return Need{{kDiagonals, 2 * n + 1}}; },
            [&](int n) { return check_ratio_diagonals(d, n); });
  return std::move(run.out);
}

FactorReport factor_smooth(const BigInt& value, unsigned long bound) {
  if (value < 1) throw std::invalid_argument("factor_smooth needs a positive value");
  FactorReport f;
  f.value = value;
  f.bound = bound;
  BigInt rest = value;
  bool exhausted = false;
  for (unsigned long d = 2; d <= bound; d += d == 2 ? 1 : 2) {
    if (BigInt(d) * d > rest) {
      exhausted = true;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e) f.factors.emplace_back(BigInt(d), e);
  }
  if (rest == 1) return f;
  if (exhausted) {
    f.cofactor = FactorReport::Cofactor::Prime;
  } else {
    switch (mpz_probab_prime_p(rest.get_mpz_t(), 30)) {
      case 2: f.cofactor = FactorReport::Cofactor::Prime; break;
      case 1: f.cofactor = FactorReport::Cofactor::ProbablePrime; break;
      default: f.cofactor = FactorReport::Cofactor::Composite; break;
    }
  }
  f.factors.emplace_back(rest, 1);
  return f;
}

namespace {

std::string_view cofactor_name(FactorReport::Cofactor c) {
  switch (c) {
    case FactorReport::Cofactor::One: return "one";
    case FactorReport::Cofactor::Prime: return "prime";
    case FactorReport::Cofactor::ProbablePrime: return "probable prime";
    case FactorReport::Cofactor::Composite: return "composite";
  }
  return "?";
}

}  // namespace

std::string to_string(const FactorReport& f) {
  if (f.factors.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& [p, e] = f.factors[i];
    if (i) out << " * ";
    out << p.get_str();
    if (e > 1) out << '^' << e;
  }
  if (f.cofactor == FactorReport::Cofactor::ProbablePrime || f.cofactor == FactorReport::Cofactor::Composite) {
    out << " (" << cofactor_name(f.cofactor) << ')';
  }
  return out.str();
}

nlohmann::json to_json(const FactorReport& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({p.get_str(), e});
  return {{"value", f.value.get_str()},
          {"factors", factors},
          {"cofactor", cofactor_name(f.cofactor)},
          {"bound", f.bound},
          {"text", to_string(f)}};
}

}  // namespace asmsym
