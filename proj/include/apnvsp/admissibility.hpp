#pragma once

// Constraint rules on amplitude-distribution types of quadratic APN functions
// F: F_2^n -> F_2^n with n even, and the enumeration of every type that no
// rule excludes. A type lists k_l for even l >= 2; a component with exponent
// l corresponds to an l-dimensional member of the associated vector space
// partition, and the bent count k_0 is whatever is left of 2^n - 1.
//
// Admissible means "not excluded by these rules". It never claims that a
// function with that distribution exists.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apnvsp/errors.hpp"

namespace apnvsp {

class DistributionType {
 public:
  DistributionType(unsigned n, std::map<unsigned, std::uint64_t> counts) : n_(n) {
    if (n % 2 != 0 || n < 2 || n > 16) throw InputError("distribution types need even n in [2, 16]");
    for (const auto& [l, k] : counts) {
      if (l == 0 || l % 2 != 0 || l > n) {
        throw InputError("exponent " + std::to_string(l) + " is not an even value in [2, n]");
      }
      if (k > 0) counts_[l] = k;
    }
  }

  unsigned n() const { return n_; }
  const std::map<unsigned, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(unsigned l) const {
    auto it = counts_.find(l);
    return it == counts_.end() ? 0 : it->second;
  }

  /// |N_F|, the number of non-bent nonzero components.
  std::uint64_t n_size() const {
    std::uint64_t s = 0;
    for (const auto& [l, k] : counts_) s += k;
    return s;
  }
  /// k_0 = 2^n - 1 - |N_F|; negative when the counts overshoot.
  std::int64_t bent_count() const {
    return static_cast<std::int64_t>((std::uint64_t{1} << n_) - 1) - static_cast<std::int64_t>(n_size());
  }
  unsigned max_dim() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }
  unsigned min_dim() const { return counts_.empty() ? 0 : counts_.begin()->first; }
  std::optional<unsigned> second_min_dim() const {
    if (counts_.size() < 2) return std::nullopt;
    return std::next(counts_.begin())->first;
  }

  /// Partition notation, e.g. "[2^64,6^1]".
  std::string partition_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [l, k] : counts_) {
      os << (first ? "" : ",") << l << '^' << k;
      first = false;
    }
    os << ']';
    return os.str();
  }

  /// Amplitude-distribution notation including the bent count, e.g. "[0^190,2^64,6^1]".
  std::string distribution_string() const {
    std::ostringstream os;
    os << "[0^" << bent_count();
    for (const auto& [l, k] : counts_) os << ',' << l << '^' << k;
    os << ']';
    return os.str();
  }

  /// Canonical order: the count vector (k_2, k_4, ..., k_n) compared lexicographically.
  friend bool operator<(const DistributionType& a, const DistributionType& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (unsigned l = 2; l <= a.n_; l += 2) {
      if (a.count(l) != b.count(l)) return a.count(l) < b.count(l);
    }
    return false;
  }
  friend bool operator==(const DistributionType&, const DistributionType&) = default;

 private:
  unsigned n_;
  std::map<unsigned, std::uint64_t> counts_;
};

struct RuleVerdict {
  std::string rule;
  bool pass = true;
  bool applicable = true;  // false: hypotheses not met, so the rule passes vacuously
  std::string detail;
  std::vector<std::pair<std::string, std::int64_t>> values;
};

namespace rules {

inline std::int64_t pow2(unsigned e) { return std::int64_t{1} << e; }

/// sum_{i=0}^{s-2} 2^(i k)
inline std::int64_t geometric_tail(unsigned s, unsigned k) {
  std::int64_t sum = 0;
  for (unsigned i = 0; i + 2 <= s; ++i) sum += pow2(i * k);
  return sum;
}

}  // namespace rules

inline RuleVerdict rule_packing(const DistributionType& t) {
  std::int64_t covered = 0;
  for (const auto& [l, k] : t.counts()) covered += static_cast<std::int64_t>(k) * (rules::pow2(l) - 1);
  const std::int64_t target = rules::pow2(t.n()) - 1;
  RuleVerdict v{"packing", covered == target, true, {}, {{"covered", covered}, {"target", target}}};
  v.detail = "sum k_l (2^l - 1) = " + std::to_string(covered) + (v.pass ? " == " : " != ") + std::to_string(target);
  return v;
}

inline RuleVerdict rule_dimension_bounds(const DistributionType& t) {
  RuleVerdict v{"dimension_bounds", true, true, {}, {}};
  const unsigned n = t.n();
  for (const auto& [l, k] : t.counts()) {
    if (2 * l > n && k > 1) {
      v.pass = false;
      v.detail = "k_" + std::to_string(l) + " = " + std::to_string(k) + " > 1 with " + std::to_string(l) + " > n/2";
      v.values = {{"dim", l}, {"count", static_cast<std::int64_t>(k)}};
      return v;
    }
  }
  for (const auto& [i, ki] : t.counts()) {
    for (const auto& [j, kj] : t.counts()) {
      if (j < i) continue;
      if (i == j && ki < 2) continue;
      if (i + j > n) {
        v.pass = false;
        v.detail = "dims " + std::to_string(i) + " and " + std::to_string(j) + " sum to more than n";
        v.values = {{"dim_a", i}, {"dim_b", j}};
        return v;
      }
    }
  }
  v.detail = "at most one member above n/2 and pairwise dims sum to <= n";
  return v;
}

inline RuleVerdict rule_no_full_amplitude(const DistributionType& t) {
  const auto kn = static_cast<std::int64_t>(t.count(t.n()));
  RuleVerdict v{"no_full_amplitude", kn == 0, true, {}, {{"k_n", kn}}};
  v.detail = kn == 0 ? "no component of amplitude 2^n" : "a component of amplitude 2^n means linearity 2^n";
  return v;
}

inline RuleVerdict rule_tail(const DistributionType& t) {
  RuleVerdict v{"tail", true, true, {}, {}};
  const auto d2opt = t.second_min_dim();
  if (!d2opt) {
    v.applicable = false;
    v.detail = "fewer than two distinct dimensions";
    return v;
  }
  const unsigned d1 = t.min_dim();
  const unsigned d2 = *d2opt;
  const auto k = static_cast<std::int64_t>(t.count(d1));
  const std::int64_t q = rules::pow2(d2 - d1);
  const bool divisible = k % q == 0;
  v.values = {{"d1", d1}, {"d2", d2}, {"k", k}};
  std::vector<std::string> cases;

  if (!divisible && d2 < 2 * d1) {
    const std::int64_t need = rules::pow2(d1) + 1;
    cases.push_back("(i) k >= " + std::to_string(need));
    v.pass = v.pass && k >= need;
  }
  if (!divisible && d2 >= 2 * d1) {
    const std::int64_t spread = (rules::pow2(d2) - 1) / (rules::pow2(d1) - 1);
    const bool exact = d2 % d1 == 0 && k == spread;
    cases.push_back("(ii) k = " + std::to_string(spread) + " with d1 | d2, or k > " + std::to_string(2 * q));
    v.pass = v.pass && (exact || k > 2 * q);
  }
  if (divisible && d2 <= 2 * d1) {
    const std::int64_t need = rules::pow2(d2) - rules::pow2(d1) + q;
    cases.push_back("(iii) k >= " + std::to_string(need));
    v.pass = v.pass && k >= need;
  }
  if (divisible && d2 >= 2 * d1) {
    const std::int64_t need = rules::pow2(d2);
    cases.push_back("(iv) k >= " + std::to_string(need));
    v.pass = v.pass && k >= need;
  }
  std::ostringstream os;
  os << "d1=" << d1 << " d2=" << d2 << " k=" << k << ":";
  for (const auto& c : cases) os << ' ' << c;
  v.detail = os.str();
  return v;
}

inline RuleVerdict rule_mod4(const DistributionType& t) {
  const auto size = static_cast<std::int64_t>(t.n_size());
  RuleVerdict v{"mod4", size % 4 == 1, true, {}, {{"n_size", size}, {"residue", size % 4}}};
  v.detail = "|N_F| = " + std::to_string(size) + " = " + std::to_string(size % 4) + " mod 4";
  return v;
}

/// 2^(n/2) + 2^(n/2-2) + 2^(n/2-3) - 1
inline std::int64_t apn_bent_threshold(unsigned n) {
  const unsigned h = n / 2;
  return rules::pow2(h) + rules::pow2(h - 2) + rules::pow2(h - 3) - 1;
}

inline RuleVerdict rule_bent_lower_bound(const DistributionType& t) {
  RuleVerdict v{"bent_lower_bound", true, true, {}, {}};
  if (t.n() < 6) {
    v.applicable = false;
    v.detail = "needs n >= 6";
    return v;
  }
  const std::int64_t bound = apn_bent_threshold(t.n());
  const auto size = static_cast<std::int64_t>(t.n_size());
  const bool strict = t.n() != 8;
  v.pass = strict ? size > bound : size >= bound;
  v.values = {{"n_size", size}, {"bound", bound}, {"strict", strict ? 1 : 0}};
  v.detail = "|N_F| = " + std::to_string(size) + (strict ? " must exceed " : " must reach ") + std::to_string(bound);
  return v;
}

/// Lower bound on |N_F| from the largest dimension k <= n/2.
inline RuleVerdict rule_lb1(const DistributionType& t) {
  RuleVerdict v{"lb1", true, true, {}, {}};
  const unsigned n = t.n();
  const unsigned k = t.max_dim();
  if (k == 0 || 2 * k > n) {
    v.applicable = false;
    v.detail = "largest dimension exceeds n/2";
    return v;
  }
  const unsigned s = n / k;
  const unsigned r = n % k;
  const std::int64_t bound = r == 0 ? (rules::pow2(n) - 1) / (rules::pow2(k) - 1)
                                    : 1 + rules::pow2((k + r + 1) / 2) + rules::pow2(k + r) * rules::geometric_tail(s, k);
  const auto size = static_cast<std::int64_t>(t.n_size());
  v.pass = size >= bound;
  v.values = {{"k", k}, {"bound", bound}, {"n_size", size}};
  v.detail = "k=" + std::to_string(k) + ": |N_F| = " + std::to_string(size) + " >= " + std::to_string(bound) + "?";
  return v;
}

/// |N_F| >= 2^k + 2^l + 1 for k the largest dimension and any present l with 2 <= l < n-k, l != k.
inline RuleVerdict rule_lb2(const DistributionType& t) {
  RuleVerdict v{"lb2", true, true, {}, {}};
  const unsigned n = t.n();
  const unsigned k = t.max_dim();
  std::optional<unsigned> best;
  for (const auto& [l, cnt] : t.counts()) {
    if (l >= 2 && l + k < n && l != k) best = l;
  }
  if (!best) {
    v.applicable = false;
    v.detail = "no qualifying second dimension";
    return v;
  }
  const std::int64_t bound = rules::pow2(k) + rules::pow2(*best) + 1;
  const auto size = static_cast<std::int64_t>(t.n_size());
  v.pass = size >= bound;
  v.values = {{"k", k}, {"l", *best}, {"bound", bound}, {"n_size", size}};
  v.detail = "k=" + std::to_string(k) + " l=" + std::to_string(*best) + ": |N_F| = " + std::to_string(size) +
             " >= " + std::to_string(bound) + "?";
  return v;
}

/// Upper bound on |N_F| from the smallest dimension.
inline RuleVerdict rule_ub(const DistributionType& t) {
  RuleVerdict v{"ub", true, true, {}, {}};
  const unsigned n = t.n();
  const unsigned k = t.min_dim();
  if (k == 0) {
    v.applicable = false;
    v.detail = "no non-bent components";
    return v;
  }
  const unsigned s = n / k;
  const unsigned r = n % k;
  const std::int64_t bound = 1 + rules::pow2(k + r) * rules::geometric_tail(s, k);
  const auto size = static_cast<std::int64_t>(t.n_size());
  v.pass = size <= bound;
  v.values = {{"k", k}, {"bound", bound}, {"n_size", size}};
  v.detail = "k=" + std::to_string(k) + ": |N_F| = " + std::to_string(size) + " <= " + std::to_string(bound) + "?";
  return v;
}

inline std::vector<RuleVerdict> evaluate_rules(const DistributionType& t) {
  return {rule_packing(t), rule_dimension_bounds(t), rule_no_full_amplitude(t), rule_tail(t), rule_mod4(t),
          rule_bent_lower_bound(t), rule_lb1(t), rule_lb2(t), rule_ub(t)};
}

struct AdmissibilityEntry {
  DistributionType type;
  std::vector<RuleVerdict> verdicts;
  bool admissible = false;

  std::vector<std::string> failing_rules() const {
    std::vector<std::string> out;
    for (const auto& v : verdicts) {
      if (!v.pass) out.push_back(v.rule);
    }
    return out;
  }
};

inline AdmissibilityEntry assess(const DistributionType& t) {
  AdmissibilityEntry e{t, evaluate_rules(t), true};
  for (const auto& v : e.verdicts) e.admissible = e.admissible && v.pass;
  return e;
}

/// Every solution of the packing equation over even dimensions, with verdicts.
/// With include_rejected = false only the admissible types are returned.
inline std::vector<AdmissibilityEntry> enumerate_admissible(unsigned n, bool include_rejected = false) {
  if (n % 2 != 0 || n < 4 || n > 12) throw InputError("enumerate: n must be even with 4 <= n <= 12");
  std::vector<AdmissibilityEntry> out;
  std::map<unsigned, std::uint64_t> counts;
  // Largest dimension first; the remaining points must be covered by smaller ones.
  auto dfs = [&](auto&& self, unsigned dim, std::uint64_t remaining) -> void {
    if (remaining == 0) {
      auto e = assess(DistributionType(n, counts));
      if (e.admissible || include_rejected) out.push_back(std::move(e));
      return;
    }
    if (dim < 2) return;
    const std::uint64_t block = (std::uint64_t{1} << dim) - 1;
    if (dim == 2) {
      if (remaining % block != 0) return;
      counts[dim] = remaining / block;
      self(self, 0, 0);
      counts.erase(dim);
      return;
    }
    for (std::uint64_t k = remaining / block + 1; k-- > 0;) {
      if (k) counts[dim] = k;
      self(self, dim - 2, remaining - k * block);
      counts.erase(dim);
    }
  };
  dfs(dfs, n, (std::uint64_t{1} << n) - 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.type < b.type; });
  return out;
}

struct BoundComparison {
  char regime = 'A';                 // which bound the comparison names strongest
  std::optional<std::int64_t> a;     // LB1, only for k <= n/2
  std::int64_t b = 0;                // bent-count bound
  std::optional<std::int64_t> c;     // LB2 with the largest admissible l
  std::optional<unsigned> c_l;
  bool b_ties_c = false;
};

/// Which of LB1 (A), the bent bound (B) and LB2 (C) dominates for linearity exponent k.
inline BoundComparison bound_comparison(unsigned n, unsigned k) {
  if (n % 2 != 0 || n < 6) throw InputError("bound_comparison: n must be even and >= 6");
  if (k % 2 != 0 || k < 2 || k >= n) throw InputError("bound_comparison: k must be even with 2 <= k < n");
  BoundComparison r;
  r.b = apn_bent_threshold(n);
  if (2 * k <= n) {
    std::map<unsigned, std::uint64_t> single{{k, 1}};
    const DistributionType probe(n, single);
    r.a = rule_lb1(probe).values[1].second;
  }
  for (unsigned l = 2; l + k < n; l += 2) {
    if (l != k) r.c_l = l;
  }
  if (r.c_l) r.c = rules::pow2(k) + rules::pow2(*r.c_l) + 1;
  if (2 * k < n) {
    r.regime = 'A';
  } else if (2 * k == n) {
    r.regime = 'B';
    r.b_ties_c = r.c && *r.c == r.b;
  } else {
    r.regime = 'C';
  }
  return r;
}

}  // namespace apnvsp
