#pragma once

// N_F, the nonzero non-bent components of F, as a point set of PG(m-1, 2)
// (identified with F_2^m minus 0). Dimensions below are vector-space
// dimensions: a projective (n/2)-space is an (n/2 + 1)-dimensional subspace.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "apnvsp/errors.hpp"
#include "apnvsp/gf2.hpp"
#include "apnvsp/parallel.hpp"
#include "apnvsp/vbf.hpp"

namespace apnvsp {

class PointSet {
 public:
  PointSet(unsigned m, std::vector<Mask> points) : m_(m), in_(std::size_t{1} << m, 0) {
    check_width(m);
    for (Mask p : points) {
      if (p == 0 || p > full_mask(m)) {
        throw InputError("point set entries must be nonzero " + std::to_string(m) + "-bit vectors");
      }
      in_[p] = 1;
    }
    for (Mask x = 1; x < in_.size(); ++x) {
      if (in_[x]) points_.push_back(x);
    }
  }

  static PointSet all_nonzero(unsigned m) {
    std::vector<Mask> pts;
    for (Mask x = 1; x <= full_mask(m); ++x) pts.push_back(x);
    return PointSet(m, std::move(pts));
  }

  unsigned m() const { return m_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Mask x) const { return x < in_.size() && in_[x] != 0; }
  const std::vector<Mask>& points() const { return points_; }
  /// Membership bitmap over F_2^m; entry 0 is 0.
  const std::vector<std::uint8_t>& bitmap() const { return in_; }

  std::uint64_t count_in(const Subspace& w) const {
    std::uint64_t c = 0;
    w.for_each_element([&](Mask x) { c += in_[x]; });
    return c;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.m_ == b.m_ && a.points_ == b.points_; }

 private:
  unsigned m_;
  std::vector<std::uint8_t> in_;
  std::vector<Mask> points_;
};

/// { b != 0 : F_b is not bent }. Every component must be plateaued.
inline PointSet nonbent_set(const Vbf& f) {
  std::vector<Mask> pts;
  const std::uint64_t bent_sq = std::uint64_t{1} << f.n();
  for (Mask b = 1; b < f.codomain_size(); ++b) {
    const auto p = component_profile(f, b);
    exponent_of(p, f.n(), b);
    const auto a = static_cast<std::uint64_t>(p.amplitude);
    if (a * a > bent_sq) pts.push_back(b);
  }
  return PointSet(f.m(), std::move(pts));
}

struct IntersectionScan {
  bool ok = true;
  std::optional<Subspace> counterexample;
  std::uint64_t scanned = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
};

namespace detail {

/// Scans all k-subspaces for the first one (lowest index) failing pred.
template <class Pred>
IntersectionScan exhaustive_scan(unsigned m, unsigned k, Pred pred) {
  const SubspaceEnumerator en(m, k);
  std::atomic<std::uint64_t> first_bad{~std::uint64_t{0}};
  parallel_ranges(en.size(), [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t idx = begin;
    en.for_each(
        [&](const Subspace& w) {
          if (idx >= first_bad.load(std::memory_order_relaxed)) return false;
          if (!pred(w)) {
            std::uint64_t cur = first_bad.load();
            while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
            }
            return false;
          }
          ++idx;
          return true;
        },
        begin, end);
  });
  IntersectionScan r;
  r.scanned = en.size();
  if (first_bad.load() != ~std::uint64_t{0}) {
    r.ok = false;
    r.counterexample = en.at(first_bad.load());
  }
  return r;
}

}  // namespace detail

/// Uniformly random k-dimensional subspace of F_2^m.
template <class Rng>
Subspace random_subspace(unsigned m, unsigned k, Rng& rng) {
  std::uniform_int_distribution<Mask> pick(1, full_mask(m));
  Subspace s(m);
  while (s.dim() < k) s.insert(pick(rng));
  return s;
}

/// Every k-dimensional subspace W has |W cap N| odd.
inline IntersectionScan odd_intersection_check(const PointSet& n_set, unsigned k) {
  return detail::exhaustive_scan(n_set.m(), k, [&](const Subspace& w) { return n_set.count_in(w) % 2 == 1; });
}

/// Same check over `samples` uniformly random k-subspaces drawn from a seeded generator.
inline IntersectionScan odd_intersection_sampled(const PointSet& n_set, unsigned k, std::uint64_t samples,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntersectionScan r;
  r.sampled = true;
  r.seed = seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Subspace w = random_subspace(n_set.m(), k, rng);
    ++r.scanned;
    if (n_set.count_in(w) % 2 == 0) {
      r.ok = false;
      r.counterexample = w;
      break;
    }
  }
  return r;
}

/// Every k-dimensional subspace meets N in at least `fold` points.
inline bool kfold_check(const PointSet& n_set, unsigned k, std::uint64_t fold) {
  if (n_set.size() < fold) return false;
  return detail::exhaustive_scan(n_set.m(), k, [&](const Subspace& w) { return n_set.count_in(w) >= fold; }).ok;
}

inline bool is_blocking_set(const PointSet& n_set, unsigned k) { return kfold_check(n_set, k, 1); }

/// Depth-first search over subspaces contained in a set S (0 implicitly included).
///
/// Each subspace U is generated once, by the sequence g_i = min(U \ span(g_1..g_{i-1})):
/// generators increase and each is the smallest element of its coset modulo the
/// span so far. Candidates at a node are the x with x + S contained in the set.
class InnerSubspaceSearch {
 public:
  InnerSubspaceSearch(unsigned m, std::vector<std::uint8_t> allowed, std::uint64_t budget)
      : m_(m), allowed_(std::move(allowed)), budget_(budget) {
    allowed_[0] = 0;
  }

  std::uint64_t nodes() const { return nodes_; }

  /// A subspace of maximum dimension inside the set.
  Subspace maximum() {
    best_ = Subspace(m_);
    maximize(Subspace(m_), allowed_, 0);
    return best_;
  }

  /// Calls visit(U) for every dim-k subspace inside the set; stops when visit returns true.
  template <class Visit>
  bool each_of_dim(unsigned k, Visit&& visit) {
    return walk(Subspace(m_), allowed_, 0, k, visit);
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted("subspace search exceeded " + std::to_string(budget_) + " nodes");
  }

  static unsigned extra_dims(std::uint64_t candidates, unsigned dim) {
    unsigned j = 0;
    while (((std::uint64_t{1} << (j + 1)) - 1) << dim <= candidates) ++j;
    return j;
  }

  std::vector<std::uint8_t> child(const std::vector<std::uint8_t>& cand, Mask p, std::uint64_t& count) const {
    std::vector<std::uint8_t> next(cand.size(), 0);
    count = 0;
    for (Mask x = 1; x < cand.size(); ++x) {
      if (cand[x] && cand[x ^ p]) {
        next[x] = 1;
        ++count;
      }
    }
    return next;
  }

  void maximize(const Subspace& s, const std::vector<std::uint8_t>& cand, Mask last) {
    tick();
    if (s.dim() > best_.dim()) best_ = s;
    for (Mask p = last + 1; p < cand.size(); ++p) {
      if (!cand[p] || s.reduce(p) != p) continue;
      std::uint64_t count = 0;
      auto next = child(cand, p, count);
      Subspace t = s;
      t.insert(p);
      if (t.dim() + extra_dims(count, t.dim()) <= best_.dim()) continue;
      maximize(t, next, p);
      if (best_.dim() == m_) return;
    }
  }

  template <class Visit>
  bool walk(const Subspace& s, const std::vector<std::uint8_t>& cand, Mask last, unsigned k, Visit& visit) {
    tick();
    if (s.dim() == k) return visit(s);
    for (Mask p = last + 1; p < cand.size(); ++p) {
      if (!cand[p] || s.reduce(p) != p) continue;
      std::uint64_t count = 0;
      auto next = child(cand, p, count);
      Subspace t = s;
      t.insert(p);
      if (t.dim() + extra_dims(count, t.dim()) < k) continue;
      if (walk(t, next, p, k, visit)) return true;
    }
    return false;
  }

  unsigned m_;
  std::vector<std::uint8_t> allowed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Subspace best_{1};
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Largest subspace contained in S cup {0}.
inline Subspace max_subspace_in(const PointSet& s, std::uint64_t budget = kDefaultNodeBudget) {
  InnerSubspaceSearch search(s.m(), s.bitmap(), budget);
  return search.maximum();
}

/// Contains an (m - n/2)-dimensional subspace.
inline bool is_trivial_blocking(const PointSet& n_set, unsigned n) {
  const unsigned need = n_set.m() >= n / 2 ? n_set.m() - n / 2 : 0;
  return max_subspace_in(n_set).dim() >= need;
}

struct MinimalityResult {
  bool minimal = true;
  std::optional<Mask> removable;  // a point whose removal keeps N blocking
};

/// Minimal iff every P in N lies on some k-subspace W with W cap N = {P}.
inline MinimalityResult minimality_check(const PointSet& n_set, unsigned k) {
  if (n_set.m() > 10) throw InputError("minimality_check is offered for m <= 10");
  for (Mask p : n_set.points()) {
    const bool tangent = !enumerate_superspaces(Subspace::span({p}, n_set.m()), k).for_each([&](const Subspace& w) {
      return n_set.count_in(w) != 1;  // keep going while no tangent space is found
    });
    if (!tangent) return {false, p};
  }
  return {};
}

/// V, W inside N cup {0} with V + W = F_2^n directly. Searches the smaller
/// dimension from n/2 downwards. Throws BudgetExhausted past `budget` nodes.
inline std::optional<std::pair<Subspace, Subspace>> complementary_pair_search(
    const PointSet& n_set, std::uint64_t budget = kDefaultNodeBudget) {
  const unsigned n = n_set.m();
  std::uint64_t spent = 0;
  auto charge = [&](std::uint64_t nodes) {
    spent += nodes;
    if (spent > budget) throw BudgetExhausted("complementary pair search exceeded " + std::to_string(budget) + " nodes");
  };
  InnerSubspaceSearch probe(n, n_set.bitmap(), budget);
  const unsigned max_dim = probe.maximum().dim();
  charge(probe.nodes());

  for (unsigned small = n / 2 + 1; small-- > 0;) {
    const unsigned big = n - small;
    if (big > max_dim) break;
    if ((std::uint64_t{1} << big) + (std::uint64_t{1} << small) - 2 > n_set.size()) continue;
    std::optional<std::pair<Subspace, Subspace>> found;
    InnerSubspaceSearch outer(n, n_set.bitmap(), budget - spent);
    outer.each_of_dim(big, [&](const Subspace& v) {
      std::vector<std::uint8_t> allowed = n_set.bitmap();
      v.for_each_element([&](Mask x) { allowed[x] = 0; });
      InnerSubspaceSearch inner(n, std::move(allowed), budget - spent);
      inner.each_of_dim(small, [&](const Subspace& w) {
        found.emplace(v, w);
        return true;
      });
      charge(inner.nodes());
      return found.has_value();
    });
    charge(outer.nodes());
    if (found) return found;
  }
  return std::nullopt;
}

/// Threshold values from the blocking-set bounds, evaluated for (n, m).
struct BlockingBounds {
  std::int64_t bose_burton = 0;                   // 2^(m-n/2) - 1
  std::optional<std::int64_t> govaerts_storme;    // smallest non-trivial, when n <= 2m - 6
  std::optional<std::int64_t> apn_bent_bound;     // n = m >= 6, strict unless n = 8
  std::optional<std::int64_t> ccz_size_threshold; // 3 (2^(n/2) - 1), n = m
};

inline BlockingBounds blocking_bounds(unsigned n, unsigned m) {
  BlockingBounds b;
  const int e = static_cast<int>(m) - static_cast<int>(n / 2);
  auto p2 = [](int x) { return x >= 0 ? std::int64_t{1} << x : 0; };
  b.bose_burton = p2(e) - 1;
  if (n + 6 <= 2 * m && e >= 3) b.govaerts_storme = p2(e) + p2(e - 2) + p2(e - 3) - 1;
  if (n == m && n >= 6) b.apn_bent_bound = p2(e) + p2(e - 2) + p2(e - 3) - 1;
  if (n == m) b.ccz_size_threshold = 3 * (p2(static_cast<int>(n / 2)) - 1);
  return b;
}

enum class PairStatus { found, none, budget_exhausted, skipped };

inline const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::found: return "found";
    case PairStatus::none: return "none";
    case PairStatus::budget_exhausted: return "budget_exhausted";
    case PairStatus::skipped: return "skipped";
  }
  return "?";
}

/// Necessary conditions for a quadratic F: F_2^n -> F_2^n (n even) to be
/// CCZ-equivalent to a permutation.
struct CczReport {
  unsigned n = 0;
  std::uint64_t n_size = 0;
  std::int64_t size_threshold = 0;
  bool size_ok = false;
  std::optional<bool> threefold_ok;  // absent when not evaluated
  PairStatus pair_status = PairStatus::skipped;
  std::optional<std::pair<Subspace, Subspace>> pair;
  bool certified_not_permutation = false;
  std::vector<std::string> reasons;
};

struct CczOptions {
  bool check_threefold = true;
  bool search_pair = true;
  std::uint64_t budget = kDefaultNodeBudget;
  std::uint64_t exhaustive_limit = 5'000'000;  // 3-fold scan skipped above this many subspaces
};

inline CczReport ccz_necessary_report(const PointSet& n_set, CczOptions opt = {}) {
  const unsigned n = n_set.m();
  if (n % 2 != 0) throw InputError("ccz check requires even n");
  CczReport r;
  r.n = n;
  r.n_size = n_set.size();
  r.size_threshold = 3 * ((std::int64_t{1} << (n / 2)) - 1);
  r.size_ok = static_cast<std::int64_t>(r.n_size) >= r.size_threshold;
  if (!r.size_ok) {
    r.reasons.push_back("|N_F| = " + std::to_string(r.n_size) + " < " + std::to_string(r.size_threshold));
  }
  if (opt.check_threefold && gaussian_binomial(n, n / 2 + 1) <= opt.exhaustive_limit) {
    r.threefold_ok = kfold_check(n_set, n / 2 + 1, 3);
    if (!*r.threefold_ok) r.reasons.push_back("N_F is not a 3-fold blocking set w.r.t. (n/2)-spaces");
  }
  if (opt.search_pair) {
    try {
      r.pair = complementary_pair_search(n_set, opt.budget);
      r.pair_status = r.pair ? PairStatus::found : PairStatus::none;
      if (!r.pair) r.reasons.push_back("N_F cup {0} holds no pair of complementary subspaces");
    } catch (const BudgetExhausted&) {
      r.pair_status = PairStatus::budget_exhausted;
    }
  }
  r.certified_not_permutation = !r.reasons.empty();
  return r;
}

inline CczReport ccz_necessary_report(const Vbf& f, CczOptions opt = {}) {
  if (f.n() != f.m()) throw InputError("ccz check requires n = m");
  return ccz_necessary_report(nonbent_set(f), opt);
}

struct BlockingReport {
  unsigned n = 0;
  unsigned m = 0;
  std::uint64_t n_size = 0;
  unsigned mod4 = 0;
  unsigned scan_dim = 0;  // n/2 + 1
  IntersectionScan odd;
  bool is_blocking = false;
  std::optional<MinimalityResult> minimality;
  Subspace max_inner{1};
  bool is_trivial = false;
  std::optional<bool> threefold_ok;
  PairStatus pair_status = PairStatus::skipped;
  std::optional<std::pair<Subspace, Subspace>> pair;
  BlockingBounds bounds;
};

struct BlockingOptions {
  std::uint64_t sample_budget = 100'000;  // subspaces sampled when the exhaustive scan is too large
  std::uint64_t exhaustive_limit = 5'000'000;
  std::uint64_t seed = 1;
  bool minimality = true;
  std::uint64_t minimality_limit = 200'000;  // superspaces per point
  bool ccz = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// n is the input width of F (even); N lives in F_2^m.
inline BlockingReport blocking_report(const PointSet& n_set, unsigned n, BlockingOptions opt = {}) {
  if (n % 2 != 0) throw InputError("blocking analysis requires even n");
  BlockingReport r;
  r.n = n;
  r.m = n_set.m();
  r.n_size = n_set.size();
  r.mod4 = static_cast<unsigned>(r.n_size % 4);
  r.scan_dim = n / 2 + 1;
  r.bounds = blocking_bounds(n, r.m);
  if (r.scan_dim > r.m) {
    r.is_blocking = true;  // no subspace to block
  } else {
    if (gaussian_binomial(r.m, r.scan_dim) <= opt.exhaustive_limit) {
      r.odd = odd_intersection_check(n_set, r.scan_dim);
      r.is_blocking = r.odd.ok || is_blocking_set(n_set, r.scan_dim);
    } else {
      // Sampled evidence only; odd intersections imply blocking.
      r.odd = odd_intersection_sampled(n_set, r.scan_dim, opt.sample_budget, opt.seed);
      r.is_blocking = r.odd.ok;
    }
  }
  r.max_inner = max_subspace_in(n_set, opt.node_budget);
  r.is_trivial = r.max_inner.dim() + n / 2 >= r.m;
  if (opt.minimality && r.m <= 10 && r.is_blocking && r.scan_dim <= r.m &&
      gaussian_binomial(r.m - 1, r.scan_dim - 1) <= opt.minimality_limit) {
    r.minimality = minimality_check(n_set, r.scan_dim);
  }
  if (opt.ccz && n == r.m) {
    CczOptions c;
    c.budget = opt.node_budget;
    c.exhaustive_limit = opt.exhaustive_limit;
    const auto ccz = ccz_necessary_report(n_set, c);
    r.threefold_ok = ccz.threefold_ok;
    r.pair_status = ccz.pair_status;
    r.pair = ccz.pair;
  }
  return r;
}

}  // namespace apnvsp
