#pragma once

// Vectorial Boolean functions F: F_2^n -> F_2^m as full lookup tables, with
// their Walsh spectra, amplitude distribution, algebraic degree and DDT.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "apnvsp/errors.hpp"
#include "apnvsp/gf2.hpp"

namespace apnvsp {

class Vbf {
 public:
  Vbf(unsigned n, unsigned m, std::vector<Mask> table) : n_(n), m_(m), table_(std::move(table)) {
    check_width(n);
    check_width(m);
    if (table_.size() != (std::size_t{1} << n)) {
      throw InputError("lookup table must have 2^" + std::to_string(n) + " entries, got " +
                       std::to_string(table_.size()));
    }
    const Mask limit = full_mask(m);
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (table_[x] > limit) {
        throw InputError("entry " + std::to_string(x) + " = " + std::to_string(table_[x]) +
                         " does not fit in " + std::to_string(m) + " bits");
      }
    }
  }

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  std::uint32_t domain_size() const { return std::uint32_t{1} << n_; }
  std::uint32_t codomain_size() const { return std::uint32_t{1} << m_; }
  Mask operator()(Mask x) const { return table_[x]; }
  std::span<const Mask> table() const { return table_; }

  friend bool operator==(const Vbf&, const Vbf&) = default;

 private:
  unsigned n_;
  unsigned m_;
  std::vector<Mask> table_;
};

inline Vbf identity_vbf(unsigned n) {
  std::vector<Mask> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = static_cast<Mask>(x);
  return Vbf(n, n, std::move(t));
}

/// In-place Walsh-Hadamard butterfly; values.size() must be a power of two.
inline void fwht(std::span<std::int32_t> values) {
  const std::size_t size = values.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = values[j];
        const std::int32_t v = values[j + h];
        values[j] = u + v;
        values[j + h] = u - v;
      }
    }
  }
}

/// Row b of the Walsh transform: entry a is sum_x (-1)^(<b,F(x)> + <a,x>).
inline std::vector<std::int32_t> walsh_row(const Vbf& f, Mask b) {
  if (b >= f.codomain_size()) throw InputError("walsh_row: component out of range");
  std::vector<std::int32_t> row(f.domain_size());
  for (std::uint32_t x = 0; x < f.domain_size(); ++x) row[x] = dot(b, f(x)) ? -1 : 1;
  fwht(row);
  return row;
}

/// Direct double sum; independent of the butterfly.
inline std::int32_t walsh_naive(const Vbf& f, Mask b, Mask a) {
  std::int32_t sum = 0;
  for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
    sum += ((dot(b, f(x)) ^ dot(a, x)) != 0u) ? -1 : 1;
  }
  return sum;
}

struct ComponentProfile {
  std::int32_t amplitude = 0;  // max_a |W_F(b,a)|
  bool plateaued = false;      // every |W| in {0, amplitude}
  std::uint32_t support = 0;   // number of a with |W| = amplitude
};

inline ComponentProfile profile_row(std::span<const std::int32_t> row) {
  ComponentProfile p;
  for (std::int32_t w : row) p.amplitude = std::max(p.amplitude, std::abs(w));
  p.plateaued = true;
  for (std::int32_t w : row) {
    const std::int32_t a = std::abs(w);
    if (a == p.amplitude) {
      ++p.support;
    } else if (a != 0) {
      p.plateaued = false;
    }
  }
  return p;
}

inline ComponentProfile component_profile(const Vbf& f, Mask b) { return profile_row(walsh_row(f, b)); }

inline std::int32_t amplitude(const Vbf& f, Mask b) { return component_profile(f, b).amplitude; }

inline bool is_plateaued(const Vbf& f, Mask b) { return component_profile(f, b).plateaued; }

/// l with amplitude 2^((n+l)/2), from a precomputed profile.
inline unsigned exponent_of(const ComponentProfile& p, unsigned n, Mask b) {
  const auto sq = static_cast<std::uint64_t>(p.amplitude) * static_cast<std::uint64_t>(p.amplitude);
  if (!p.plateaued || !std::has_single_bit(sq)) {
    throw NotPlateaued("component " + std::to_string(b) + " is not plateaued", b);
  }
  return static_cast<unsigned>(std::countr_zero(sq)) - n;
}

inline unsigned component_exponent(const Vbf& f, Mask b) {
  if (b == 0) throw InputError("component_exponent: b must be nonzero");
  return exponent_of(component_profile(f, b), f.n(), b);
}

/// Multiset of amplitude exponents l_b over the nonzero components.
struct AmplitudeDistribution {
  unsigned n = 0;
  std::map<unsigned, std::uint64_t> counts;  // exponent l -> multiplicity k_l

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [l, k] : counts) t += k;
    return t;
  }
  std::uint64_t count(unsigned l) const {
    auto it = counts.find(l);
    return it == counts.end() ? 0 : it->second;
  }
  unsigned max_exponent() const { return counts.empty() ? 0 : counts.rbegin()->first; }
  /// log2 of the linearity, i.e. (n + max l) / 2 when that is an integer.
  unsigned linearity_log2() const { return (n + max_exponent()) / 2; }

  /// "[0^42,2^21]"
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [l, k] : counts) {
      if (k == 0) continue;
      if (!first) os << ',';
      os << l << '^' << k;
      first = false;
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const AmplitudeDistribution&, const AmplitudeDistribution&) = default;
};

/// Exponent l_b of every component b (index 0 unused). Throws NotPlateaued.
inline std::vector<unsigned> component_exponents(const Vbf& f) {
  std::vector<unsigned> out(f.codomain_size(), 0);
  for (Mask b = 1; b < f.codomain_size(); ++b) out[b] = exponent_of(component_profile(f, b), f.n(), b);
  return out;
}

inline AmplitudeDistribution amplitude_distribution(const Vbf& f) {
  AmplitudeDistribution d;
  d.n = f.n();
  const auto ex = component_exponents(f);
  for (Mask b = 1; b < f.codomain_size(); ++b) ++d.counts[ex[b]];
  return d;
}

/// Coefficients of the algebraic normal form of a Boolean function given by its truth table.
inline std::vector<std::uint8_t> anf(std::vector<std::uint8_t> truth) {
  const std::size_t size = truth.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; ++i) {
      if (i & h) truth[i] ^= truth[i ^ h];
    }
  }
  return truth;
}

inline unsigned algebraic_degree(const Vbf& f) {
  unsigned deg = 0;
  std::vector<std::uint8_t> bits(f.domain_size());
  for (unsigned j = 0; j < f.m(); ++j) {
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) bits[x] = (f(x) >> j) & 1u;
    const auto coeffs = anf(bits);
    for (std::uint32_t u = 0; u < f.domain_size(); ++u) {
      if (coeffs[u]) deg = std::max(deg, static_cast<unsigned>(std::popcount(u)));
    }
  }
  return deg;
}

inline bool is_quadratic(const Vbf& f) { return algebraic_degree(f) <= 2; }

/// Row a of the difference distribution table.
inline std::vector<std::uint32_t> ddt_row(const Vbf& f, Mask a) {
  std::vector<std::uint32_t> row(f.codomain_size(), 0);
  for (std::uint32_t x = 0; x < f.domain_size(); ++x) ++row[f(x) ^ f(x ^ a)];
  return row;
}

/// Full table, row-major by input difference a. Intended for n + m <= 24.
inline std::vector<std::uint32_t> ddt(const Vbf& f) {
  if (f.n() + f.m() > 24) throw InputError("ddt: table too large; use ddt_row");
  std::vector<std::uint32_t> table;
  table.reserve(std::size_t{f.domain_size()} * f.codomain_size());
  for (Mask a = 0; a < f.domain_size(); ++a) {
    const auto row = ddt_row(f, a);
    table.insert(table.end(), row.begin(), row.end());
  }
  return table;
}

inline std::uint32_t differential_uniformity(const Vbf& f) {
  std::uint32_t best = 0;
  std::vector<std::uint32_t> row(f.codomain_size());
  for (Mask a = 1; a < f.domain_size(); ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) ++row[f(x) ^ f(x ^ a)];
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

inline bool is_apn(const Vbf& f) { return differential_uniformity(f) == 2; }

/// Sum over nonzero b of 2^(l_b) equals 2(2^n - 1). For plateaued F with n = m
/// this is equivalent to F being APN.
inline bool fourth_moment_check(const Vbf& f) {
  if (f.n() != f.m()) throw InputError("fourth_moment_check: requires n = m");
  const auto ex = component_exponents(f);
  std::uint64_t sum = 0;
  for (Mask b = 1; b < f.codomain_size(); ++b) sum += std::uint64_t{1} << ex[b];
  return sum == 2 * (std::uint64_t{f.domain_size()} - 1);
}

}  // namespace apnvsp
