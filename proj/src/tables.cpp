#include "asmsym/tables.hpp"

#include <algorithm>
#include <sstream>

namespace asmsym {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

std::string_view format_extension(Format f) {
  switch (f) {
    case Format::Text: return "txt";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "txt";
}

CountGrid count_grid(DataStore& data, const std::vector<int>& sizes, const std::vector<SymmetryClass>& classes) {
  CountGrid grid;
  grid.sizes = sizes;
  grid.classes = classes;
  for (int n : sizes) {
    auto& row = grid.cells.emplace_back();
    for (SymmetryClass c : classes) {
      if (data.available(c, n)) {
        row.emplace_back(data.count(c, n));
      } else {
        row.emplace_back(std::nullopt);
      }
    }
  }
  return grid;
}

namespace {

std::string cell_text(const std::optional<BigInt>& v) { return v ? v->get_str() : "*"; }

}  // namespace

std::string render_counts(const CountGrid& grid, Format f) {
  std::ostringstream out;
  if (f == Format::Json) {
    nlohmann::json classes = nlohmann::json::array();
    for (SymmetryClass c : grid.classes) classes.push_back(class_id(c));
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.sizes.size(); ++i) {
      nlohmann::json counts = nlohmann::json::array();
      for (const auto& cell : grid.cells[i]) counts.push_back(cell ? nlohmann::json(cell->get_str()) : nlohmann::json());
      rows.push_back({{"size", grid.sizes[i]}, {"counts", counts}});
    }
    out << nlohmann::json{{"classes", classes}, {"rows", rows}}.dump(2) << '\n';
    return out.str();
  }
  if (f == Format::Csv) {
    out << "size";
    for (SymmetryClass c : grid.classes) out << ',' << class_id(c);
    out << '\n';
    for (std::size_t i = 0; i < grid.sizes.size(); ++i) {
      out << grid.sizes[i];
      for (const auto& cell : grid.cells[i]) out << ',' << (cell ? cell->get_str() : "");
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::size_t> width(grid.classes.size() + 1, 4);
  for (std::size_t i = 0; i < grid.sizes.size(); ++i) {
    width[0] = std::max(width[0], std::to_string(grid.sizes[i]).size());
    for (std::size_t j = 0; j < grid.classes.size(); ++j) {
      width[j + 1] = std::max(width[j + 1], cell_text(grid.cells[i][j]).size());
    }
  }
  auto pad = [&](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  out << pad("size", width[0]);
  for (std::size_t j = 0; j < grid.classes.size(); ++j) out << "  " << pad(std::to_string(class_id(grid.classes[j])), width[j + 1]);
  out << '\n';
  for (std::size_t i = 0; i < grid.sizes.size(); ++i) {
    out << pad(std::to_string(grid.sizes[i]), width[0]);
    for (std::size_t j = 0; j < grid.classes.size(); ++j) out << "  " << pad(cell_text(grid.cells[i][j]), width[j + 1]);
    out << '\n';
  }
  return out.str();
}

std::string render_reports(const std::vector<VerdictReport>& reports, Format f) {
  std::ostringstream out;
  if (f == Format::Json) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    out << all.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "id,params,verdict,lhs,rhs,quotient\n";
    for (const auto& r : reports) {
      out << r.id << ',';
      for (std::size_t i = 0; i < r.params.size(); ++i) out << (i ? ";" : "") << r.params[i].first << '=' << r.params[i].second;
      out << ',' << verdict_name(r.verdict) << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ','
          << (r.quotient ? to_string(*r.quotient) : "") << '\n';
    }
  } else {
    for (const auto& r : reports) out << to_text(r) << '\n';
  }
  return out.str();
}

std::vector<NamedPoly> polynomial_table(DataStore& data, std::vector<std::string>* warnings) {
  std::vector<NamedPoly> out;
  auto warn = [&](std::string w) {
    if (warnings) warnings->push_back(std::move(w));
  };
  auto mu_label = [](const char* family, const char* vars, int n, int mu) {
    return std::string(family) + "_" + std::to_string(n) + "(" + vars + "," + std::to_string(mu) + ")";
  };

  for (int mu : {0, 1}) {
    for (int n = 1; n <= 4; ++n) out.push_back({"Z", mu_label("Z", "x,y", n, mu), n, mu, data.z(n, mu)});
  }
  for (int mu : {0, 1}) {
    for (int n = 1; n <= 4; ++n) out.push_back({"T", mu_label("T", "x", n, mu), n, mu, data.t(n, mu)});
  }
  for (int mu : {0, 1}) {
    for (int n = 1; n <= 3; ++n) out.push_back({"R", mu_label("R", "x", n, mu), n, mu, data.r(n, mu)});
  }
  for (int n = 1; n <= 7; n += 2) {
    if (!data.available(SymmetryClass::HalfTurn, n)) {
      warn("H_" + std::to_string(n) + "(1,y) skipped: half-turn cutoff");
      break;
    }
    out.push_back({"H", "H_" + std::to_string(n) + "(1,y)", n, std::nullopt, subs_x(data.poly(SymmetryClass::HalfTurn, n), 1)});
  }
  for (int size = 1; size <= 9; size += 2) {
    if (!data.available(SymmetryClass::HalfTurn, size)) {
      warn("S_" + std::to_string(size) + " skipped: half-turn cutoff");
      break;
    }
    const VerdictReport r = extract_half_turn_odd_factor(data, size);
    if (!r.quotient) {
      warn("S_" + std::to_string(size) + " not extracted: " + r.note);
      break;
    }
    out.push_back({"S", "S_" + std::to_string(size) + "(x)", size, std::nullopt, *r.quotient});
  }
  const QuarterTurnFactors factors = extract_quarter_turn_factors(data);
  for (std::size_t n = 0; n < factors.w.size() && n <= 8; ++n) {
    out.push_back({"w", "w_" + std::to_string(n) + "(x)", static_cast<int>(n), std::nullopt, factors.w[n]});
  }
  if (factors.w.size() <= 8) warn("w extracted only through w_" + std::to_string(factors.w.size() - 1));
  for (const auto& [n, v] : factors.v) {
    if (n > 4) break;
    out.push_back({"v", "v_" + std::to_string(n) + "(x)", n, std::nullopt, v});
  }
  if (factors.v.size() < 4) warn("v extracted only through v_" + std::to_string(factors.v.size()));
  return out;
}

std::string render_polys(const std::vector<NamedPoly>& polys, Format f) {
  std::ostringstream out;
  if (f == Format::Json) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& p : polys) {
      nlohmann::json j = {{"family", p.family}, {"label", p.label}, {"n", p.n}};
      if (p.mu) j["mu"] = *p.mu;
      j["text"] = to_string(p.poly);
      j["terms"] = to_json(p.poly);
      all.push_back(j);
    }
    out << all.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "family,label,n,mu,polynomial\n";
    for (const auto& p : polys) {
      out << p.family << ",\"" << p.label << "\"," << p.n << ',' << (p.mu ? std::to_string(*p.mu) : "") << ','
          << to_string(p.poly) << '\n';
    }
  } else {
    for (const auto& p : polys) {
      out << p.label << " = " << (p.family == "Z" ? to_grouped_string(p.poly) : to_string(p.poly)) << '\n';
    }
  }
  return out.str();
}

TableSet build_tables(DataStore& data, Format f, const std::vector<int>& sizes) {
  TableSet set;
  const std::string ext(format_extension(f));
  std::vector<SymmetryClass> classes(std::begin(kAllClasses), std::end(kAllClasses));
  const CountGrid grid = count_grid(data, sizes, classes);
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto last = std::find_if(grid.sizes.begin(), grid.sizes.end(), [&](int n) { return !data.available(classes[j], n); });
    if (last != grid.sizes.end()) {
      set.warnings.push_back("class " + std::to_string(class_id(classes[j])) + " truncated at size " +
                             std::to_string(data.cutoffs().get(classes[j])));
    }
  }
  set.files.emplace_back("counts." + ext, render_counts(grid, f));

  SuiteOptions ratios;
  ratios.id_prefix = "ratio-";
  set.files.emplace_back("ratios." + ext, render_reports(run_suite(data, ratios), f));

  set.files.emplace_back("generating-functions." + ext, render_polys(polynomial_table(data, &set.warnings), f));
  return set;
}

}  // namespace asmsym
