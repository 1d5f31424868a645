#pragma once

// Checks of the determinant theorems and the symmetry-class conjectures as
// exact polynomial or rational equalities, plus extraction of the residual
// factor sequences by exact division.
//
// Identity ids:
//   thm-det-factor-even/odd     Z_{2n}(x,1,mu) = T_n R_n, Z_{2n+1}(x,1,mu) = 2 T_{n+1} R_n
//   thm-det-product             Z_n(1,1,mu) = prod Delta_k(2mu)
//   thm-tri-product             T_n(1,mu) = 2^-n prod Delta_2k(2mu)
//   thm-half-turn-x2-*          the three H(2,1) relations
//   oracle-z-shifted-pp, oracle-t-tri-array
//   conj-*                      symmetry-class generating function identities
//   ratio-*                     consecutive-count ratios and products
// Ids starting with "thm-" or "oracle-" are proved statements: an Unequal
// verdict there is an implementation bug.

#include "asmsym/datastore.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace asmsym {

using Value = std::variant<BiPoly, Rational>;

std::string to_string(const Value& v);
nlohmann::json to_json(const Value& v);

enum class Verdict { Equal, Unequal, Extracted };

std::string_view verdict_name(Verdict v);

struct VerdictReport {
  std::string id;
  std::vector<std::pair<std::string, long>> params;
  Value lhs;
  Value rhs;
  Verdict verdict = Verdict::Unequal;
  /// Set when the check divides out a factor: lhs = rhs * quotient.
  std::optional<BiPoly> quotient;
  std::string note;

  bool proved() const;
  bool failed() const { return verdict == Verdict::Unequal; }
};

nlohmann::json to_json(const VerdictReport& r);
/// One line: "id n=3 mu=1: Equal" followed by both sides.
std::string to_text(const VerdictReport& r);

struct IdentityInfo {
  std::string id;
  std::string statement;
};
const std::vector<IdentityInfo>& identity_catalogue();

// Determinant theorems.
VerdictReport check_det_factor_even(DataStore& data, int n, int mu);
VerdictReport check_det_factor_odd(DataStore& data, int n, int mu);
VerdictReport check_det_product(DataStore& data, int n, int mu);
VerdictReport check_tri_product(DataStore& data, int n, int mu);

// Half-turn values at x = 2, y = 1. All throw MissingData past the cutoff.
VerdictReport check_half_turn_x2_4n(DataStore& data, int n);
VerdictReport check_half_turn_x2_4n_plus_2(DataStore& data, int n);
VerdictReport check_half_turn_x2_odd(DataStore& data, int n);

VerdictReport check_oracle_shifted_pp(DataStore& data, int n, int mu);
VerdictReport check_oracle_tri_array(DataStore& data, int n, int mu);

VerdictReport check_all_vs_z(DataStore& data, int n);
VerdictReport check_flip_vs_t(DataStore& data, int n);
VerdictReport check_half_turn_even_vs_z(DataStore& data, int n);
VerdictReport check_all_at_3(DataStore& data, int n);
/// size = 4n + offset with offset in {0, 1, -1}.
VerdictReport check_quarter_turn_y(DataStore& data, int n, int offset);
/// size = 4n + offset with offset in {1, -1}.
VerdictReport check_plus(DataStore& data, int n, int offset);

/// S_size(x) for odd size: H_size(x,1) divided by the R/T factor for
/// size = 4n+1 or 4n-1. Extracted on success, Unequal if inexact.
VerdictReport extract_half_turn_odd_factor(DataStore& data, int size);

/// The quarter-turn factor sequences w_0, w_1, ... and v_1, v_2, ...
struct QuarterTurnFactors {
  std::vector<BiPoly> w;
  std::map<int, BiPoly> v;
  std::vector<VerdictReport> reports;
};
/// w_0 = w_1 = 1; for n >= 1, w_{n+1} = Q_{2n+1}(x,1) / (w_n * x^[n odd]).
/// v_n = Q_{4n}(x,1) / w_{2n} with nonnegative coefficients. Stops at the
/// first missing size or failed division.
QuarterTurnFactors extract_quarter_turn_factors(DataStore& data);

/// sum over SC-CSPPs in [1,2m]^3 of x^special equals x^m w_{2m}(x).
VerdictReport check_scc_vs_w(DataStore& data, int m, const QuarterTurnFactors& factors);

/// Ratio identities between consecutive counts.
VerdictReport check_ratio_all(DataStore& data, int n);
VerdictReport check_ratio_flip(DataStore& data, int n);
VerdictReport check_ratio_half_turn_odd(DataStore& data, int n);
VerdictReport check_ratio_half_turn_even(DataStore& data, int n);
VerdictReport check_product_quarter_turn(DataStore& data, int n, int offset);
VerdictReport check_ratio_plus_4n_plus_1(DataStore& data, int n);
VerdictReport check_ratio_plus_4n_plus_3(DataStore& data, int n);
VerdictReport check_ratio_diagonals(DataStore& data, int n);

struct SuiteOptions {
  /// Only identities whose id starts with this prefix.
  std::string id_prefix;
  /// Restrict to instances whose "n" (or "m") parameter equals this.
  std::optional<long> n;
  int det_factor_max = 3;
  int det_product_max = 7;
  int tri_product_max = 5;
  int oracle_max = 4;
  int scc_max = 3;
  std::vector<int> mus{0, 1, 2};
};

/// Every instance available under the store's cutoffs, in catalogue order
/// and then by parameters. Sizes past a cutoff are skipped, not reported.
std::vector<VerdictReport> run_suite(DataStore& data, const SuiteOptions& options = {});

struct FactorReport {
  enum class Cofactor { One, Prime, ProbablePrime, Composite };

  BigInt value;
  /// Ascending primes; the last entry is the unfactored cofactor when it
  /// exceeds the bound.
  std::vector<std::pair<BigInt, unsigned>> factors;
  Cofactor cofactor = Cofactor::One;
  unsigned long bound = 0;
};

/// Trial division by primes up to bound. The cofactor left over is
/// classified as proven prime, probable prime or composite.
FactorReport factor_smooth(const BigInt& value, unsigned long bound = 1000);

/// "2^4 * 23"; an uncertain cofactor is marked "(probable prime)" or
/// "(composite)". 1 renders as "1".
std::string to_string(const FactorReport& f);
nlohmann::json to_json(const FactorReport& f);

}  // namespace asmsym
