#pragma once

// Lazily computed, cached generating functions shared by the verification
// harness, the table emitters and the CLI. Enumeration sizes are bounded by
// per-class cutoffs; asking past a cutoff raises MissingData.

#include "asmsym/detgen.hpp"
#include "asmsym/genfun.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace asmsym {

class MissingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeCutoffs {
 public:
  /// Defaults keep a full run within a minute on one core.
  static SizeCutoffs defaults();

  int get(SymmetryClass c) const { return max_[static_cast<std::size_t>(class_id(c) - 1)]; }
  void set(SymmetryClass c, int n);

  /// Applies "CLASS=N,CLASS=N"; classes by id or mnemonic. Throws
  /// std::invalid_argument on malformed text or N < 1.
  void apply(std::string_view spec);

  std::string to_string() const;

 private:
  std::array<int, 8> max_{};
};

class DataStore {
 public:
  explicit DataStore(SizeCutoffs cutoffs = SizeCutoffs::defaults(), unsigned threads = 1);

  const SizeCutoffs& cutoffs() const { return cutoffs_; }
  unsigned threads() const { return threads_; }

  /// 1 <= n <= cutoff for the class.
  bool available(SymmetryClass c, int n) const;
  const WeightedGF& gf(SymmetryClass c, int n);
  const BiPoly& poly(SymmetryClass c, int n) { return gf(c, n).poly; }
  const BigInt& count(SymmetryClass c, int n) { return gf(c, n).count; }

  const BiPoly& z(int n, int mu);
  const BiPoly& t(int n, int mu);
  const BiPoly& r(int n, int mu);

 private:
  SizeCutoffs cutoffs_;
  unsigned threads_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, WeightedGF> gfs_;
  std::map<std::pair<int, int>, BiPoly> z_, t_, r_;
};

}  // namespace asmsym
