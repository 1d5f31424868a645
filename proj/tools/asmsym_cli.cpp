// asmsym: enumerate symmetry classes of alternating sign matrices, evaluate
// the determinant generating functions and check the identities between them.
//
// Exit codes: 0 ok, 1 usage (including requests past a cutoff),
// 2 a proved identity failed, 3 internal error.

#include "asmsym/tables.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace asmsym;

constexpr int kUsage = 1;
constexpr int kTheoremFailure = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::vector<std::string> cutoffs;
  unsigned threads = 1;
};

struct Selection {
  std::vector<std::string> classes;
  std::string sizes;
};

std::vector<int> parse_sizes(const std::string& text, int first, int last) {
  std::string lo = text;
  std::string hi = text;
  if (text.empty()) {
    lo = std::to_string(first);
    hi = std::to_string(last);
  } else if (const auto dots = text.find(".."); dots != std::string::npos) {
    lo = text.substr(0, dots);
    hi = text.substr(dots + 2);
  }
  int a = 0;
  int b = 0;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    a = std::stoi(lo, &used_a);
    b = std::stoi(hi, &used_b);
    if (used_a != lo.size() || used_b != hi.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("size range must be N or A..B: " + text);
  }
  if (a < 1 && a <= b) throw UsageError("sizes start at 1");
  std::vector<int> out;
  for (int n = a; n <= b; ++n) out.push_back(n);
  return out;
}

std::vector<SymmetryClass> parse_classes(const std::vector<std::string>& items) {
  std::vector<SymmetryClass> out;
  // "--classes all" asks for every class; a lone "all" elsewhere is class 1.
  if (items.size() == 1 && (items[0] == "all" || items[0] == "every")) {
    return {std::begin(kAllClasses), std::end(kAllClasses)};
  }
  for (const auto& item : items) {
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ',')) {
      const auto c = parse_class(part);
      if (!c) throw UsageError("unknown class: " + part);
      out.push_back(*c);
    }
  }
  if (out.empty()) throw UsageError("no class given");
  return out;
}

Format parse_format_or_throw(const std::string& text) {
  const auto f = parse_format(text);
  if (!f) throw UsageError("format must be text, json or csv");
  return *f;
}

DataStore make_store(const Common& common, int max_size = 0) {
  SizeCutoffs cutoffs = SizeCutoffs::defaults();
  if (max_size > 0) {
    for (SymmetryClass c : kAllClasses) cutoffs.set(c, std::min(cutoffs.get(c), max_size));
  }
  try {
    for (const auto& spec : common.cutoffs) cutoffs.apply(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return DataStore(cutoffs, common.threads);
}

int run_count(const Common& common, const Selection& sel) {
  const Format f = parse_format_or_throw(common.format);
  const auto classes = parse_classes(sel.classes.empty() ? std::vector<std::string>{"all"} : sel.classes);
  const auto sizes = parse_sizes(sel.sizes, 1, 7);
  DataStore data = make_store(common);
  std::cout << render_counts(count_grid(data, sizes, classes), f);
  return 0;
}

struct GenfunArgs {
  std::string family;
  int n = -1;
  int mu = 0;
  std::string at_x;
  std::string at_y;
};

NamedPoly family_poly(DataStore& data, const GenfunArgs& a) {
  const std::string& fam = a.family;
  const int n = a.n;
  if (n < 0) throw UsageError("--n is required");
  auto label = [&](const std::string& name) {
    return NamedPoly{fam, name + "_" + std::to_string(n), n, std::nullopt, BiPoly()};
  };
  if (fam == "Z" || fam == "T" || fam == "R") {
    if (a.mu < 0) throw UsageError("--mu must be nonnegative");
    NamedPoly p{fam, fam + "_" + std::to_string(n), n, a.mu, BiPoly()};
    p.poly = fam == "Z" ? data.z(n, a.mu) : fam == "T" ? data.t(n, a.mu) : data.r(n, a.mu);
    return p;
  }
  if (fam == "S") {
    if (n < 1 || n % 2 == 0) throw UsageError("S is indexed by odd sizes");
    const VerdictReport r = extract_half_turn_odd_factor(data, n);
    if (!r.quotient) throw std::runtime_error("S_" + std::to_string(n) + " does not divide exactly");
    NamedPoly p = label("S");
    p.poly = *r.quotient;
    return p;
  }
  if (fam == "w" || fam == "v") {
    const QuarterTurnFactors factors = extract_quarter_turn_factors(data);
    NamedPoly p = label(fam);
    if (fam == "w") {
      if (static_cast<std::size_t>(n) >= factors.w.size()) {
        throw MissingData("w_" + std::to_string(n) + " needs more quarter-turn sizes; raise --cutoff 5=N");
      }
      p.poly = factors.w[static_cast<std::size_t>(n)];
    } else {
      const auto it = factors.v.find(n);
      if (it == factors.v.end()) throw MissingData("v_" + std::to_string(n) + " needs more quarter-turn sizes; raise --cutoff 5=N");
      p.poly = it->second;
    }
    return p;
  }
  static const std::map<std::string, SymmetryClass> letters = {
      {"A", SymmetryClass::Unrestricted}, {"F", SymmetryClass::Flip}, {"H", SymmetryClass::HalfTurn},
      {"Q", SymmetryClass::QuarterTurn},  {"P", SymmetryClass::Plus}, {"X", SymmetryClass::Diagonals}};
  std::optional<SymmetryClass> c;
  if (const auto it = letters.find(fam); it != letters.end()) c = it->second;
  if (!c) c = parse_class(fam);
  if (!c) throw UsageError("unknown family: " + fam);
  if (n < 1) throw UsageError("--n must be at least 1");
  NamedPoly p = label(fam);
  p.poly = data.poly(*c, n);
  return p;
}

int run_genfun(const Common& common, const GenfunArgs& args) {
  const Format f = parse_format_or_throw(common.format);
  DataStore data = make_store(common);
  const NamedPoly p = family_poly(data, args);
  Rational x0;
  Rational y0;
  try {
    if (!args.at_x.empty()) x0 = parse_rational(args.at_x);
    if (!args.at_y.empty()) y0 = parse_rational(args.at_y);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad evaluation point: ") + e.what());
  }
  const bool fix_x = !args.at_x.empty();
  const bool fix_y = !args.at_y.empty();
  std::optional<Rational> value;
  BiPoly poly = p.poly;
  if (fix_x && fix_y) {
    value = eval(poly, x0, y0);
  } else if (fix_x || fix_y) {
    const Rational& v = fix_x ? x0 : y0;
    if (v.get_den() != 1) throw UsageError("a single evaluation point must be an integer");
    poly = fix_x ? subs_x(poly, v.get_num()) : subs_y(poly, v.get_num());
  }
  const std::string text = value ? to_string(*value) : (p.family == "Z" && !fix_x && !fix_y) ? to_grouped_string(poly) : to_string(poly);
  if (f == Format::Json) {
    nlohmann::json j = {{"family", p.family}, {"n", p.n}};
    if (p.mu) j["mu"] = *p.mu;
    if (fix_x) j["at_x"] = to_string(x0);
    if (fix_y) j["at_y"] = to_string(y0);
    if (value) {
      j["value"] = to_string(*value);
    } else {
      j["text"] = to_string(poly);
      j["terms"] = to_json(poly);
    }
    std::cout << j.dump(2) << '\n';
  } else if (f == Format::Csv) {
    std::cout << "family,n,mu,value\n" << p.family << ',' << p.n << ',' << (p.mu ? std::to_string(*p.mu) : "") << ',' << text << '\n';
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

struct VerifyArgs {
  bool all = false;
  bool list = false;
  std::string id;
  std::optional<long> n;
  std::string family;
  std::string max_size = "default";
};

int run_verify(const Common& common, const VerifyArgs& args) {
  const Format f = parse_format_or_throw(common.format);
  if (args.list) {
    for (const auto& info : identity_catalogue()) std::cout << info.id << "  " << info.statement << '\n';
    return 0;
  }
  int max_size = 0;
  if (args.max_size != "default") {
    try {
      max_size = std::stoi(args.max_size);
    } catch (const std::exception&) {
      throw UsageError("--max-size takes a size or 'default'");
    }
    if (max_size < 1) throw UsageError("--max-size must be at least 1");
  }
  DataStore data = make_store(common, max_size);
  SuiteOptions options;
  options.id_prefix = args.all ? "" : args.id;
  options.n = args.n;
  auto reports = run_suite(data, options);
  if (!args.family.empty()) {
    static const std::map<std::string, std::string> family_tag = {
        {"A", "-all"}, {"F", "-flip"}, {"H", "-half-turn"}, {"Q", "-quarter-turn"}, {"P", "-plus"}, {"X", "-diagonals"}};
    const auto it = family_tag.find(args.family);
    if (it == family_tag.end()) throw UsageError("--family takes one of A F H Q P X");
    std::erase_if(reports, [&](const VerdictReport& r) { return r.id.find(it->second) == std::string::npos; });
  }
  if (reports.empty()) throw UsageError("no identity instance matches the selection within the cutoffs");

  std::size_t equal = 0;
  std::size_t extracted = 0;
  std::size_t unequal = 0;
  std::size_t proved_failures = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Equal) ++equal;
    if (r.verdict == Verdict::Extracted) ++extracted;
    if (r.failed()) {
      ++unequal;
      if (r.proved()) ++proved_failures;
    }
  }
  std::cout << render_reports(reports, f);
  if (f == Format::Text) {
    std::cout << reports.size() << " checks: " << equal << " equal, " << extracted << " extracted, " << unequal << " unequal";
    if (proved_failures) std::cout << " (" << proved_failures << " in proved identities)";
    std::cout << '\n';
  }
  return proved_failures ? kTheoremFailure : 0;
}

struct TablesArgs {
  std::string sizes = "1..17";
  std::string out;
};

int run_tables(const Common& common, const TablesArgs& args) {
  const Format f = parse_format_or_throw(common.format);
  DataStore data = make_store(common);
  const TableSet set = build_tables(data, f, parse_sizes(args.sizes, 1, 17));
  for (const auto& w : set.warnings) std::cerr << "warning: " << w << '\n';
  if (args.out.empty()) {
    for (const auto& [name, contents] : set.files) std::cout << "== " << name << '\n' << contents;
    return 0;
  }
  std::filesystem::create_directories(args.out);
  for (const auto& [name, contents] : set.files) {
    const auto path = std::filesystem::path(args.out) / name;
    std::ofstream file(path, std::ios::binary);
    file << contents;
    if (!file) throw std::runtime_error("cannot write " + path.string());
  }
  return 0;
}

struct FactorArgs {
  std::vector<std::string> values;
  unsigned long bound = 1000;
};

int run_factor(const Common& common, const Selection& sel, const FactorArgs& args) {
  const Format f = parse_format_or_throw(common.format);
  std::vector<std::pair<std::string, BigInt>> items;
  for (const auto& v : args.values) {
    BigInt value;
    if (value.set_str(v, 10) != 0 || value < 1) throw UsageError("factor needs positive integers: " + v);
    items.emplace_back(v, value);
  }
  if (!sel.classes.empty()) {
    DataStore data = make_store(common);
    for (SymmetryClass c : parse_classes(sel.classes)) {
      for (int n : parse_sizes(sel.sizes, 1, data.cutoffs().get(c))) {
        if (!data.available(c, n)) continue;
        const BigInt& count = data.count(c, n);
        if (count >= 1) items.emplace_back("class " + std::to_string(class_id(c)) + " size " + std::to_string(n), count);
      }
    }
  }
  if (items.empty()) throw UsageError("factor needs values or --class");
  nlohmann::json all = nlohmann::json::array();
  if (f == Format::Csv) std::cout << "item,value,factorization\n";
  for (const auto& [label, value] : items) {
    const FactorReport r = factor_smooth(value, args.bound);
    if (f == Format::Json) {
      nlohmann::json j = to_json(r);
      j["item"] = label;
      all.push_back(j);
    } else if (f == Format::Csv) {
      std::cout << label << ',' << value.get_str() << ',' << to_string(r) << '\n';
    } else {
      std::cout << (label == value.get_str() ? "" : label + ": ") << value.get_str() << " = " << to_string(r) << '\n';
    }
  }
  if (f == Format::Json) std::cout << all.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry classes of alternating sign matrices: counts, generating functions, identity checks"};
  app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "text, json or csv")->capture_default_str();
  app.add_option("--cutoff", common.cutoffs, "Largest enumerated size per class, CLASS=N,...")->delimiter(';');
  app.add_option("--threads", common.threads, "Worker threads for enumeration")->capture_default_str();

  Selection count_sel;
  auto* count = app.add_subcommand("count", "Counts by size and class");
  count->add_option("--class,--classes", count_sel.classes, "Class ids or names; 'all' for every class");
  count->add_option("--size,--sizes", count_sel.sizes, "N or A..B (default 1..7)");

  GenfunArgs gen;
  auto* genfun_cmd = app.add_subcommand("genfun", "One generating polynomial");
  genfun_cmd->add_option("family", gen.family, "Z T R A F H Q P S w v, or a class")->required();
  genfun_cmd->add_option("--n,--size", gen.n, "Size or index");
  genfun_cmd->add_option("--mu", gen.mu, "mu for Z, T, R")->capture_default_str();
  genfun_cmd->add_option("--at-x", gen.at_x, "Evaluate at x (integer or p/q)");
  genfun_cmd->add_option("--at-y", gen.at_y, "Evaluate at y (integer or p/q)");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check theorems, conjectures and ratio identities");
  verify_cmd->add_flag("--all", ver.all, "Every identity (the default when --id is absent)");
  verify_cmd->add_flag("--list", ver.list, "List identity ids and statements");
  verify_cmd->add_option("--id", ver.id, "Identity id or id prefix, e.g. thm- or conj-flip-t");
  verify_cmd->add_option("--n", ver.n, "Only instances with this n");
  verify_cmd->add_option("--family", ver.family, "Restrict to one family: A F H Q P X");
  verify_cmd->add_option("--max-size", ver.max_size, "Cap every class cutoff, or 'default'")->capture_default_str();

  TablesArgs tab;
  auto* tables_cmd = app.add_subcommand("tables", "Count grid, ratio checks and generating polynomials");
  tables_cmd->add_option("--size,--sizes", tab.sizes, "Rows of the count grid, A..B")->capture_default_str();
  tables_cmd->add_option("--out", tab.out, "Write files into this directory instead of stdout");

  Selection factor_sel;
  FactorArgs fac;
  auto* factor_cmd = app.add_subcommand("factor", "Trial-division factorization of values or class counts");
  factor_cmd->add_option("values", fac.values, "Positive integers");
  factor_cmd->add_option("--class,--classes", factor_sel.classes, "Factor the counts of these classes");
  factor_cmd->add_option("--size,--sizes", factor_sel.sizes, "N or A..B");
  factor_cmd->add_option("--bound", fac.bound, "Trial division bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return run_count(common, count_sel);
    if (*genfun_cmd) return run_genfun(common, gen);
    if (*verify_cmd) return run_verify(common, ver);
    if (*tables_cmd) return run_tables(common, tab);
    if (*factor_cmd) return run_factor(common, factor_sel, fac);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MissingData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
