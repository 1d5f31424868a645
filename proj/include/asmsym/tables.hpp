#pragma once

// Emitters for the three result tables: counts by size and class, the
// ratio identities between consecutive counts, and the generating
// polynomials. Output depends only on the data, never on thread count.

#include "asmsym/verify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asmsym {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view text);
std::string_view format_extension(Format f);

struct CountGrid {
  std::vector<int> sizes;
  std::vector<SymmetryClass> classes;
  /// cells[size][class]; empty past the class cutoff.
  std::vector<std::vector<std::optional<BigInt>>> cells;
};

CountGrid count_grid(DataStore& data, const std::vector<int>& sizes, const std::vector<SymmetryClass>& classes);
/// Missing cells print "*" in text, stay empty in CSV and are null in JSON.
std::string render_counts(const CountGrid& grid, Format f);

std::string render_reports(const std::vector<VerdictReport>& reports, Format f);

struct NamedPoly {
  std::string family;
  std::string label;
  int n = 0;
  std::optional<int> mu;
  BiPoly poly;
};

/// Z_n(x,y,mu) for n <= 4, T_n(x,mu) for n <= 4, R_n(x,mu) for n <= 3
/// (mu = 0, 1), H_n(1,y) for odd n <= 7, S_1..S_9, w_0..w_8 and v_1..v_4,
/// each as far as the cutoffs allow. Shortfalls are appended to warnings.
std::vector<NamedPoly> polynomial_table(DataStore& data, std::vector<std::string>* warnings = nullptr);
std::string render_polys(const std::vector<NamedPoly>& polys, Format f);

struct TableSet {
  /// (file name, contents) in a fixed order.
  std::vector<std::pair<std::string, std::string>> files;
  std::vector<std::string> warnings;
};

TableSet build_tables(DataStore& data, Format f, const std::vector<int>& sizes);

}  // namespace asmsym
