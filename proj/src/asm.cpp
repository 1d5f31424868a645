#include "asmsym/asm.hpp"

#include <algorithm>
#include <array>

namespace asmsym {

Asm::Asm(int n, std::vector<std::int8_t> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("Asm entry count does not match n*n");
  }
}

Asm Asm::identity(int n) {
  Asm m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Asm Asm::anti_identity(int n) {
  Asm m(n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

Asm Asm::from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  Asm m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("Asm rows must form a square");
    }
    for (int j = 0; j < n; ++j) {
      switch (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        case '+':
        case '1': m.at(i, j) = 1; break;
        case '-': m.at(i, j) = -1; break;
        case '0':
        case '.': m.at(i, j) = 0; break;
        default: throw std::invalid_argument("Asm rows use '+', '-', '0'");
      }
    }
  }
  return m;
}

std::string Asm::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const int v = (*this)(i, j);
      out += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    out += '\n';
  }
  return out;
}

bool is_asm(const Asm& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    int row = 0;
    int col = 0;
    for (int j = 0; j < n; ++j) {
      const int r = m(i, j);
      const int c = m(j, i);
      if (r < -1 || r > 1) return false;
      row += r;
      col += c;
      if (row < 0 || row > 1 || col < 0 || col > 1) return false;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

SymmetryClass class_from_id(int id) {
  if (id < 1 || id > 8) throw std::invalid_argument("symmetry class id must be 1..8");
  return static_cast<SymmetryClass>(id);
}

std::string_view class_mnemonic(SymmetryClass c) {
  static constexpr std::array<std::string_view, 8> names = {
      "all", "flip", "half-turn", "transpose", "quarter-turn", "plus", "diagonals", "full"};
  return names[static_cast<std::size_t>(class_id(c) - 1)];
}

std::optional<SymmetryClass> parse_class(std::string_view text) {
  if (text.size() == 1 && text[0] >= '1' && text[0] <= '8') return class_from_id(text[0] - '0');
  for (SymmetryClass c : kAllClasses) {
    if (class_mnemonic(c) == text) return c;
  }
  return std::nullopt;
}

bool exists_by_parity(SymmetryClass c, int n) {
  if (n < 1) return false;
  switch (c) {
    case SymmetryClass::Flip:
    case SymmetryClass::Plus:
    case SymmetryClass::Full: return n % 2 == 1;
    case SymmetryClass::QuarterTurn: return n % 4 != 2;
    default: return true;
  }
}

bool is_invariant(const Asm& m, SymmetryClass c) {
  const int n = m.size();
  const int e = n - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = m(i, j);
      bool ok = true;
      switch (c) {
        case SymmetryClass::Unrestricted: break;
        case SymmetryClass::Flip: ok = v == m(i, e - j); break;
        case SymmetryClass::HalfTurn: ok = v == m(e - i, e - j); break;
        case SymmetryClass::Transpose: ok = v == m(j, i); break;
        case SymmetryClass::QuarterTurn: ok = v == m(j, e - i); break;
        case SymmetryClass::Plus: ok = v == m(i, e - j) && v == m(e - i, j); break;
        case SymmetryClass::Diagonals: ok = v == m(j, i) && v == m(e - j, e - i); break;
        case SymmetryClass::Full: ok = v == m(j, i) && v == m(i, e - j); break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

int stat_minus_ones(const Asm& m) {
  const auto e = m.entries();
  return static_cast<int>(std::count(e.begin(), e.end(), std::int8_t{-1}));
}

int stat_top_row_pos(const Asm& m) {
  for (int j = 0; j < m.size(); ++j) {
    if (m(0, j) == 1) return j;
  }
  throw std::invalid_argument("top row has no 1");
}

int stat_halfturn_orbits(const Asm& m) {
  const int minus = stat_minus_ones(m);
  const int n = m.size();
  if (n % 2 == 1 && m(n / 2, n / 2) == -1) return (minus - 1) / 2 + 1;
  return minus / 2;
}

int stat_quarterturn_orbits(const Asm& m) {
  const int minus = stat_minus_ones(m);
  if (minus % 4 == 0) return minus / 4;
  if (minus % 4 == 1) return (minus - 1) / 4 + 1;
  throw InvalidOrbitCount("quarter-turn matrix with " + std::to_string(minus) + " entries equal to -1");
}

int stat_flip_left_minus(const Asm& m) {
  const int n = m.size();
  if (n % 2 == 0) throw InvalidSymmetry("flip-symmetric matrices have odd size");
  const int mid = n / 2;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (m(i, mid) != (i % 2 == 0 ? 1 : -1)) throw InvalidSymmetry("middle column is not alternating");
    for (int j = 0; j < mid; ++j) k += m(i, j) == -1 ? 1 : 0;
  }
  return k;
}

int stat_quadrant_minus(const Asm& m) {
  const int n = m.size();
  if (n % 2 == 0) throw InvalidSymmetry("plus-symmetric matrices have odd size");
  const int mid = n / 2;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    const int expect = i % 2 == 0 ? 1 : -1;
    if (m(i, mid) != expect || m(mid, i) != expect) throw InvalidSymmetry("middle cross is not alternating");
  }
  for (int i = 0; i < mid; ++i) {
    for (int j = 0; j < mid; ++j) k += m(i, j) == -1 ? 1 : 0;
  }
  return k;
}

}  // namespace asmsym
