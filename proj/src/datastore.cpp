#include "asmsym/datastore.hpp"

#include <charconv>
#include <sstream>

namespace asmsym {

SizeCutoffs SizeCutoffs::defaults() {
  SizeCutoffs c;
  c.max_ = {8, 13, 11, 8, 16, 17, 13, 17};
  return c;
}

void SizeCutoffs::set(SymmetryClass c, int n) {
  if (n < 1) throw std::invalid_argument("cutoff must be at least 1");
  max_[static_cast<std::size_t>(class_id(c) - 1)] = n;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

void SizeCutoffs::apply(std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("cutoff entry needs CLASS=N: " + std::string(item));
    const auto cls = parse_class(trim(item.substr(0, eq)));
    if (!cls) throw std::invalid_argument("unknown class in cutoff: " + std::string(item));
    const std::string_view num = trim(item.substr(eq + 1));
    int n = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw std::invalid_argument("bad cutoff size: " + std::string(item));
    }
    set(*cls, n);
  }
}

std::string SizeCutoffs::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < max_.size(); ++i) {
    if (i) out << ',';
    out << (i + 1) << '=' << max_[i];
  }
  return out.str();
}

DataStore::DataStore(SizeCutoffs cutoffs, unsigned threads) : cutoffs_(cutoffs), threads_(threads == 0 ? 1 : threads) {}

bool DataStore::available(SymmetryClass c, int n) const { return n >= 1 && n <= cutoffs_.get(c); }

const WeightedGF& DataStore::gf(SymmetryClass c, int n) {
  if (!available(c, n)) {
    throw MissingData("size " + std::to_string(n) + " of class " + std::string(class_mnemonic(c)) +
                      " is beyond the cutoff " + std::to_string(cutoffs_.get(c)));
  }
  const std::pair key{class_id(c), n};
  {
    std::lock_guard lock(mutex_);
    if (auto it = gfs_.find(key); it != gfs_.end()) return it->second;
  }
  WeightedGF computed = genfun(n, c, threads_);
  std::lock_guard lock(mutex_);
  return gfs_.try_emplace(key, std::move(computed)).first->second;
}

namespace {

template <class Fn>
const BiPoly& cached(std::mutex& mutex, std::map<std::pair<int, int>, BiPoly>& cache, int n, int mu, Fn compute) {
  const std::pair key{n, mu};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BiPoly p = compute(n, mu);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(p)).first->second;
}

}  // namespace

const BiPoly& DataStore::z(int n, int mu) { return cached(mutex_, z_, n, mu, z_poly); }
const BiPoly& DataStore::t(int n, int mu) { return cached(mutex_, t_, n, mu, t_poly); }
const BiPoly& DataStore::r(int n, int mu) { return cached(mutex_, r_, n, mu, r_poly); }

}  // namespace asmsym
