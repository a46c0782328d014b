#pragma once

// Bit-packed linear algebra over GF(2) for widths up to 16.
//
// A vector of F_2^n is an n-bit mask; bit j is coordinate j. Subspaces are
// stored in reduced row echelon form where the pivot of a row is its highest
// set bit, rows are sorted by pivot, and no row has a pivot bit of another
// row. With this convention the basis list is strictly increasing as
// integers, equal subspaces have identical bases, and reducing a vector by
// the basis yields the smallest element of its coset.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "apnvsp/errors.hpp"

namespace apnvsp {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxWidth = 16;

inline void check_width(unsigned n) {
  if (n == 0 || n > kMaxWidth) {
    throw InputError("width must be in [1, 16], got " + std::to_string(n));
  }
}

constexpr Mask full_mask(unsigned n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr unsigned parity(Mask x) { return static_cast<unsigned>(std::popcount(x)) & 1u; }

/// Unchecked dot product of two masks.
constexpr unsigned dot(Mask a, Mask b) { return parity(a & b); }

/// An element of F_2^n that remembers its width.
class PointVec {
 public:
  PointVec(Mask value, unsigned width) : value_(value), width_(width) {
    check_width(width);
    if (value > full_mask(width)) {
      throw InputError("point " + std::to_string(value) + " does not fit in " +
                       std::to_string(width) + " bits");
    }
  }

  Mask value() const { return value_; }
  unsigned width() const { return width_; }

  friend bool operator==(const PointVec&, const PointVec&) = default;

 private:
  Mask value_;
  unsigned width_;
};

inline unsigned dot(const PointVec& a, const PointVec& b) {
  if (a.width() != b.width()) {
    throw InputError("dot: width mismatch (" + std::to_string(a.width()) + " vs " +
                     std::to_string(b.width()) + ")");
  }
  return dot(a.value(), b.value());
}

class Subspace {
 public:
  /// The zero subspace of F_2^n.
  explicit Subspace(unsigned n = 1) : n_(n) { check_width(n); }

  /// Canonical span of arbitrary vectors. Zero and dependent vectors are absorbed.
  static Subspace span(std::span<const Mask> vectors, unsigned n) {
    Subspace s(n);
    for (Mask v : vectors) {
      if (v > full_mask(n)) {
        throw InputError("vector " + std::to_string(v) + " exceeds width " + std::to_string(n));
      }
      s.insert(v);
    }
    return s;
  }
  static Subspace span(std::initializer_list<Mask> vectors, unsigned n) {
    return span(std::span<const Mask>(vectors.begin(), vectors.size()), n);
  }

  /// The whole space F_2^n.
  static Subspace full(unsigned n) {
    Subspace s(n);
    for (unsigned j = 0; j < n; ++j) s.rows_[j] = Mask{1} << j;
    s.dim_ = n;
    return s;
  }

  unsigned ambient() const { return n_; }
  unsigned dim() const { return dim_; }
  std::span<const Mask> basis() const { return {rows_.data(), dim_}; }
  std::uint64_t size() const { return std::uint64_t{1} << dim_; }

  /// Smallest element of the coset x + V.
  Mask reduce(Mask x) const {
    for (unsigned i = dim_; i-- > 0;) {
      const Mask r = rows_[i];
      if (x & pivot_bit(r)) x ^= r;
    }
    return x;
  }

  bool contains(Mask x) const { return x <= full_mask(n_) && reduce(x) == 0; }

  /// Bitmask of pivot positions.
  Mask pivots() const {
    Mask p = 0;
    for (unsigned i = 0; i < dim_; ++i) p |= pivot_bit(rows_[i]);
    return p;
  }

  /// Visits every element, starting at 0, in Gray-code order.
  template <class Fn>
  void for_each_element(Fn&& fn) const {
    Mask x = 0;
    fn(x);
    const std::uint64_t count = size();
    for (std::uint64_t i = 1; i < count; ++i) {
      x ^= rows_[static_cast<unsigned>(std::countr_zero(i))];
      fn(x);
    }
  }

  std::vector<Mask> elements() const {
    std::vector<Mask> out;
    out.reserve(size());
    for_each_element([&](Mask x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Adds a vector to the spanning set. Returns false when it was already inside.
  bool insert(Mask v) {
    v = reduce(v);
    if (v == 0) return false;
    const Mask p = pivot_bit(v);
    for (unsigned i = 0; i < dim_; ++i) {
      if (rows_[i] & p) rows_[i] ^= v;
    }
    unsigned pos = dim_;
    while (pos > 0 && rows_[pos - 1] > v) {
      rows_[pos] = rows_[pos - 1];
      --pos;
    }
    rows_[pos] = v;
    ++dim_;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.dim_ == b.dim_ &&
           std::equal(a.rows_.begin(), a.rows_.begin() + a.dim_, b.rows_.begin());
  }

  /// Orders by (ambient, dim, basis) so subspaces can key ordered containers.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return std::lexicographical_compare(a.rows_.begin(), a.rows_.begin() + a.dim_,
                                        b.rows_.begin(), b.rows_.begin() + b.dim_);
  }

  static constexpr Mask pivot_bit(Mask r) { return std::bit_floor(r); }

 private:
  unsigned n_;
  unsigned dim_ = 0;
  std::array<Mask, kMaxWidth> rows_{};

  friend class SubspaceEnumerator;
};

inline Subspace rref(std::span<const Mask> vectors, unsigned n) { return Subspace::span(vectors, n); }

inline void require_same_ambient(const Subspace& v, const Subspace& w) {
  if (v.ambient() != w.ambient()) {
    throw InputError("subspaces live in different ambient spaces (" + std::to_string(v.ambient()) +
                     " vs " + std::to_string(w.ambient()) + ")");
  }
}

inline bool contains(const Subspace& v, const PointVec& x) {
  if (x.width() != v.ambient()) throw InputError("contains: width mismatch");
  return v.contains(x.value());
}

inline Subspace sum_space(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  Subspace s = v;
  for (Mask r : w.basis()) s.insert(r);
  return s;
}

/// V^perp with respect to the dot product.
inline Subspace orthogonal_complement(const Subspace& v) {
  const unsigned n = v.ambient();
  const Mask piv = v.pivots();
  Subspace out(n);
  for (unsigned f = 0; f < n; ++f) {
    const Mask fb = Mask{1} << f;
    if (piv & fb) continue;
    Mask w = fb;
    for (Mask r : v.basis()) {
      if (r & fb) w |= Subspace::pivot_bit(r);
    }
    out.insert(w);
  }
  return out;
}

inline Subspace intersect(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  return orthogonal_complement(sum_space(orthogonal_complement(v), orthogonal_complement(w)));
}

inline bool is_direct_complement(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  return v.dim() + w.dim() == v.ambient() && sum_space(v, w).dim() == v.ambient();
}

/// H_b = { x : <b,x> = 0 }.
inline Subspace hyperplane(Mask b, unsigned n) {
  check_width(n);
  if (b == 0 || b > full_mask(n)) throw InputError("hyperplane normal must be a nonzero n-bit vector");
  return orthogonal_complement(Subspace::span({b}, n));
}

struct AffineSubspace {
  Subspace direction;
  Mask representative = 0;  // smallest element of the coset

  AffineSubspace(Subspace dir, Mask any_point)
      : direction(dir), representative(dir.reduce(any_point)) {}

  bool contains(Mask x) const { return direction.reduce(x) == representative; }

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
};

/// The complement coset of H_b, i.e. { x : <b,x> = 1 }.
inline AffineSubspace coset(Mask b, unsigned n) {
  Subspace h = hyperplane(b, n);
  return AffineSubspace(h, Mask{1} << std::countr_zero(b));
}

/// Gaussian binomial [n choose k]_2. Throws if the value does not fit 64 bits.
inline std::uint64_t gaussian_binomial(unsigned n, unsigned k) {
  if (k > n) throw InputError("gaussian_binomial: k > n");
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    const unsigned __int128 num = (static_cast<unsigned __int128>(1) << (n - i)) - 1;
    const unsigned __int128 den = (static_cast<unsigned __int128>(1) << (i + 1)) - 1;
    acc = acc * num / den;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw InputError("gaussian_binomial overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

/// Deterministic, rankable enumeration of all k-dimensional subspaces of F_2^n.
///
/// Order: pivot sets in lexicographic order of their ascending position
/// tuples; within a pivot set, the free entries read as a binary counter
/// (row 0's free positions in ascending order occupy the low counter bits,
/// then row 1's, and so on). Any index range can be visited on its own.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(unsigned n, unsigned k) : n_(n), k_(k) {
    check_width(n);
    if (k > n) throw InputError("enumerate_subspaces: k > n");
    std::array<unsigned, kMaxWidth> piv{};
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    std::uint64_t offset = 0;
    while (true) {
      const unsigned free = free_count(piv);
      patterns_.push_back({piv, offset, free});
      offset += std::uint64_t{1} << free;
      if (!next_combination(piv)) break;
    }
    total_ = offset;
  }

  std::uint64_t size() const { return total_; }

  Subspace at(std::uint64_t index) const {
    if (index >= total_) throw InputError("subspace index out of range");
    const auto& p = locate(index);
    return build(p, index - p.offset);
  }

  /// Calls fn(const Subspace&) for indices in [begin, end). Stops early when fn returns false.
  template <class Fn>
  bool for_each(Fn&& fn, std::uint64_t begin = 0, std::uint64_t end = ~std::uint64_t{0}) const {
    end = std::min(end, total_);
    if (begin >= end) return true;
    auto it = std::upper_bound(patterns_.begin(), patterns_.end(), begin,
                               [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
    --it;
    std::uint64_t idx = begin;
    for (; it != patterns_.end() && idx < end; ++it) {
      const std::uint64_t count = std::uint64_t{1} << it->free;
      for (std::uint64_t local = idx - it->offset; local < count && idx < end; ++local, ++idx) {
        if (!invoke_continue(fn, build(*it, local))) return false;
      }
    }
    return true;
  }

 private:
  struct Pattern {
    std::array<unsigned, kMaxWidth> pivots;
    std::uint64_t offset;
    unsigned free;
  };

  unsigned free_count(const std::array<unsigned, kMaxWidth>& piv) const {
    unsigned f = 0;
    for (unsigned i = 0; i < k_; ++i) f += piv[i] - i;
    return f;
  }

  bool next_combination(std::array<unsigned, kMaxWidth>& piv) const {
    if (k_ == 0) return false;
    unsigned i = k_;
    while (i-- > 0) {
      if (piv[i] < n_ - k_ + i) {
        ++piv[i];
        for (unsigned j = i + 1; j < k_; ++j) piv[j] = piv[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  const Pattern& locate(std::uint64_t index) const {
    auto it = std::upper_bound(patterns_.begin(), patterns_.end(), index,
                               [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
    return *(it - 1);
  }

  Subspace build(const Pattern& p, std::uint64_t counter) const {
    Subspace s(n_);
    Mask pivmask = 0;
    for (unsigned i = 0; i < k_; ++i) pivmask |= Mask{1} << p.pivots[i];
    unsigned bit = 0;
    for (unsigned i = 0; i < k_; ++i) {
      Mask row = Mask{1} << p.pivots[i];
      for (unsigned j = 0; j < p.pivots[i]; ++j) {
        if (pivmask & (Mask{1} << j)) continue;
        if ((counter >> bit) & 1u) row |= Mask{1} << j;
        ++bit;
      }
      s.rows_[i] = row;
    }
    s.dim_ = k_;
    return s;
  }

  template <class Fn>
  static bool invoke_continue(Fn& fn, const Subspace& s) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Subspace&>, void>) {
      fn(s);
      return true;
    } else {
      return static_cast<bool>(fn(s));
    }
  }

  unsigned n_;
  unsigned k_;
  std::vector<Pattern> patterns_;
  std::uint64_t total_ = 0;
};

inline SubspaceEnumerator enumerate_subspaces(unsigned n, unsigned k) { return {n, k}; }

/// Enumerates every k-dimensional subspace containing v, each exactly once.
///
/// Superspaces of V correspond to subspaces of the quotient, which is
/// identified with the span of the unit vectors at V's non-pivot positions.
class SuperspaceEnumerator {
 public:
  SuperspaceEnumerator(const Subspace& v, unsigned k)
      : base_(v), quotient_(v.ambient() - v.dim() == 0 ? 1 : v.ambient() - v.dim(),
                            k >= v.dim() ? k - v.dim() : 0) {
    if (k < v.dim() || k > v.ambient()) throw InputError("enumerate_superspaces: need dim(V) <= k <= n");
    trivial_ = v.ambient() == v.dim();
    const Mask piv = v.pivots();
    for (unsigned j = 0; j < v.ambient(); ++j) {
      if (!(piv & (Mask{1} << j))) free_.push_back(j);
    }
  }

  std::uint64_t size() const { return trivial_ ? 1 : quotient_.size(); }

  template <class Fn>
  bool for_each(Fn&& fn) const {
    if (trivial_) return call(fn, base_);
    return quotient_.for_each([&](const Subspace& q) {
      Subspace s = base_;
      for (Mask r : q.basis()) s.insert(lift(r));
      return call(fn, s);
    });
  }

 private:
  Mask lift(Mask q) const {
    Mask out = 0;
    for (unsigned j = 0; j < free_.size(); ++j) {
      if (q & (Mask{1} << j)) out |= Mask{1} << free_[j];
    }
    return out;
  }

  template <class Fn>
  static bool call(Fn& fn, const Subspace& s) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Subspace&>, void>) {
      fn(s);
      return true;
    } else {
      return static_cast<bool>(fn(s));
    }
  }

  Subspace base_;
  SubspaceEnumerator quotient_;
  std::vector<unsigned> free_;
  bool trivial_ = false;
};

inline SuperspaceEnumerator enumerate_superspaces(const Subspace& v, unsigned k) { return {v, k}; }

}  // namespace apnvsp
