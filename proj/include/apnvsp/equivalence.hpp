#pragma once

// Affine maps over GF(2) and EA-equivalence G = A1 o F o A2 + A3.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "apnvsp/blocking.hpp"
#include "apnvsp/errors.hpp"
#include "apnvsp/gf2.hpp"
#include "apnvsp/partition.hpp"
#include "apnvsp/vbf.hpp"

namespace apnvsp {

/// x -> Lx + c with L given by n_out rows of width n_in (output bit i is <row_i, x>).
class AffineMap {
 public:
  AffineMap(unsigned n_in, unsigned n_out, std::vector<Mask> rows, Mask constant = 0)
      : n_in_(n_in), n_out_(n_out), rows_(std::move(rows)), constant_(constant) {
    check_width(n_in);
    check_width(n_out);
    if (rows_.size() != n_out) throw InputError("affine map needs one row per output bit");
    for (Mask r : rows_) {
      if (r > full_mask(n_in)) throw InputError("affine map row wider than the input");
    }
    if (constant_ > full_mask(n_out)) throw InputError("affine map constant wider than the output");
  }

  static AffineMap identity(unsigned n) {
    std::vector<Mask> rows(n);
    for (unsigned i = 0; i < n; ++i) rows[i] = Mask{1} << i;
    return AffineMap(n, n, std::move(rows));
  }

  static AffineMap zero(unsigned n_in, unsigned n_out) { return AffineMap(n_in, n_out, std::vector<Mask>(n_out, 0)); }

  unsigned n_in() const { return n_in_; }
  unsigned n_out() const { return n_out_; }
  const std::vector<Mask>& rows() const { return rows_; }
  Mask constant() const { return constant_; }

  Mask apply(Mask x) const { return apply_linear(x) ^ constant_; }

  Mask apply_linear(Mask x) const {
    Mask y = 0;
    for (unsigned i = 0; i < n_out_; ++i) y |= static_cast<Mask>(dot(rows_[i], x)) << i;
    return y;
  }

  AffineMap linear_part() const { return AffineMap(n_in_, n_out_, rows_); }

  /// L^T, so that <L x, b> = <x, L^T b>.
  AffineMap transpose_linear() const {
    std::vector<Mask> t(n_in_, 0);
    for (unsigned i = 0; i < n_out_; ++i) {
      for (unsigned j = 0; j < n_in_; ++j) {
        if ((rows_[i] >> j) & 1u) t[j] |= Mask{1} << i;
      }
    }
    return AffineMap(n_out_, n_in_, std::move(t));
  }

  unsigned rank() const { return Subspace::span(rows_, n_in_).dim(); }

  bool invertible() const { return n_in_ == n_out_ && rank() == n_in_; }

  AffineMap inverse() const {
    if (!invertible()) throw InputError("affine map is singular");
    const unsigned n = n_in_;
    // Gauss-Jordan on [L | I], one row per output bit.
    std::vector<Mask> left = rows_;
    std::vector<Mask> right(n);
    for (unsigned i = 0; i < n; ++i) right[i] = Mask{1} << i;
    for (unsigned col = 0; col < n; ++col) {
      unsigned piv = col;
      while (!((left[piv] >> col) & 1u)) ++piv;
      std::swap(left[piv], left[col]);
      std::swap(right[piv], right[col]);
      for (unsigned r = 0; r < n; ++r) {
        if (r != col && ((left[r] >> col) & 1u)) {
          left[r] ^= left[col];
          right[r] ^= right[col];
        }
      }
    }
    AffineMap lin_inv(n, n, right);
    return AffineMap(n, n, std::move(right), lin_inv.apply_linear(constant_));
  }

  AffineMap compose(const AffineMap& inner) const {
    if (inner.n_out_ != n_in_) throw InputError("compose: width mismatch");
    std::vector<Mask> rows(n_out_, 0);
    for (unsigned j = 0; j < inner.n_in_; ++j) {
      const Mask col = apply_linear(inner.apply_linear(Mask{1} << j));
      for (unsigned i = 0; i < n_out_; ++i) {
        if ((col >> i) & 1u) rows[i] |= Mask{1} << j;
      }
    }
    return AffineMap(inner.n_in_, n_out_, std::move(rows), apply(inner.constant_));
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  unsigned n_in_;
  unsigned n_out_;
  std::vector<Mask> rows_;
  Mask constant_;
};

inline Mask apply_map(const AffineMap& a, Mask x) { return a.apply(x); }
inline AffineMap transpose_linear(const AffineMap& a) { return a.transpose_linear(); }
inline AffineMap invert(const AffineMap& a) { return a.inverse(); }

/// Uniform random affine map n_in -> n_out from a seeded generator.
inline AffineMap random_affine(unsigned n_in, unsigned n_out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Mask> row(0, full_mask(n_in));
  std::uniform_int_distribution<Mask> cst(0, full_mask(n_out));
  std::vector<Mask> rows(n_out);
  for (auto& r : rows) r = row(rng);
  return AffineMap(n_in, n_out, std::move(rows), cst(rng));
}

/// Element of AGL(n, 2): linear part drawn by rejection until full rank, then a random constant.
inline AffineMap random_invertible(unsigned n, std::uint64_t seed) {
  check_width(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Mask> row(0, full_mask(n));
  std::vector<Mask> rows(n);
  do {
    for (auto& r : rows) r = row(rng);
  } while (Subspace::span(rows, n).dim() != n);
  return AffineMap(n, n, std::move(rows), row(rng));
}

/// G(x) = A1(F(A2(x))) + A3(x).
inline Vbf ea_transform(const Vbf& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a3) {
  if (a1.n_in() != f.m() || !a1.invertible()) throw InputError("ea_transform: A1 must be invertible on m bits");
  if (a2.n_in() != f.n() || !a2.invertible()) throw InputError("ea_transform: A2 must be invertible on n bits");
  if (a3.n_in() != f.n() || a3.n_out() != f.m()) throw InputError("ea_transform: A3 must map n bits to m bits");
  std::vector<Mask> t(f.domain_size());
  for (Mask x = 0; x < f.domain_size(); ++x) t[x] = a1.apply(f(a2.apply(x))) ^ a3.apply(x);
  return Vbf(f.n(), f.m(), std::move(t));
}

/// Seeded EA triple for an n -> m function.
struct EaTriple {
  AffineMap a1;
  AffineMap a2;
  AffineMap a3;
};

inline EaTriple random_ea_triple(unsigned n, unsigned m, std::uint64_t seed) {
  return {random_invertible(m, seed * 3 + 1), random_invertible(n, seed * 3 + 2), random_affine(n, m, seed * 3 + 3)};
}

inline Vbf ea_transform(const Vbf& f, const EaTriple& e) { return ea_transform(f, e.a1, e.a2, e.a3); }

/// Image of a point set under a linear map (constant ignored).
inline PointSet map_points(const AffineMap& l, const PointSet& s) {
  std::vector<Mask> out;
  out.reserve(s.size());
  for (Mask p : s.points()) out.push_back(l.apply_linear(p));
  return PointSet(l.n_out(), std::move(out));
}

/// G_b is bent iff F_{L1^T b} is, so L1^T maps N_G onto N_F.
inline bool verify_nonbent_equivariance(const Vbf& f, const Vbf& g, const AffineMap& a1) {
  const auto lt = a1.transpose_linear();
  return map_points(lt, nonbent_set(g)) == nonbent_set(f);
}

inline Subspace map_subspace(const AffineMap& l, const Subspace& v) {
  Subspace out(l.n_out());
  for (Mask r : v.basis()) out.insert(l.apply_linear(r));
  return out;
}

/// V^G_b = L2^{-1}(V^F_{L1^T b}) for every member b of G's partition, and the member counts agree.
inline bool verify_partition_equivariance(const Vbf& f, const Vbf& g, const AffineMap& a1, const AffineMap& a2,
                                          const AffineMap& /*a3*/) {
  const auto pf = build_partition(f);
  const auto pg = build_partition(g);
  if (pf.members.size() != pg.members.size()) return false;
  const auto lt = a1.transpose_linear();
  const auto l2_inv = a2.linear_part().inverse();
  for (const auto& [b, member] : pg.members) {
    auto it = pf.members.find(lt.apply_linear(b));
    if (it == pf.members.end()) return false;
    if (map_subspace(l2_inv, it->second.v) != member.v) return false;
  }
  return true;
}

}  // namespace apnvsp
