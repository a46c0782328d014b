#pragma once

// The vector space partition {V_b} carried by a crooked (quadratic APN)
// function. For a != 0 the image of D_a(x) = F(x) + F(x + a) is an affine
// hyperplane with normal b; T_b collects the directions whose image is the
// linear hyperplane H_b, the complement coset collects those whose image is
// its translate, and V_b is their union.

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apnvsp/errors.hpp"
#include "apnvsp/gf2.hpp"
#include "apnvsp/vbf.hpp"

namespace apnvsp {

/// Dimensions with multiplicities, ascending by dimension.
struct PartitionType {
  std::vector<std::pair<unsigned, std::uint64_t>> entries;

  static PartitionType from_dims(std::span<const unsigned> dims) {
    std::map<unsigned, std::uint64_t> tally;
    for (unsigned d : dims) ++tally[d];
    PartitionType t;
    t.entries.assign(tally.begin(), tally.end());
    return t;
  }

  std::uint64_t members() const {
    std::uint64_t s = 0;
    for (const auto& [d, k] : entries) s += k;
    return s;
  }

  /// sum k * (2^d - 1); equals 2^n - 1 for a partition of F_2^n.
  std::uint64_t covered_points() const {
    std::uint64_t s = 0;
    for (const auto& [d, k] : entries) s += k * ((std::uint64_t{1} << d) - 1);
    return s;
  }

  /// "[2^64,6^1]"
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ',';
      os << entries[i].first << '^' << entries[i].second;
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const PartitionType&, const PartitionType&) = default;
};

/// Every nonzero vector of F_2^n lies in exactly one member.
inline bool verify_cover(unsigned n, std::span<const Subspace> members) {
  std::vector<std::uint8_t> hits(std::size_t{1} << n, 0);
  for (const auto& v : members) {
    if (v.ambient() != n) return false;
    bool overlap = false;
    v.for_each_element([&](Mask x) {
      if (x != 0 && hits[x]++ != 0) overlap = true;
    });
    if (overlap) return false;
  }
  for (std::size_t x = 1; x < hits.size(); ++x) {
    if (hits[x] != 1) return false;
  }
  return true;
}

inline PartitionType type_of(std::span<const Subspace> members) {
  std::vector<unsigned> dims;
  dims.reserve(members.size());
  for (const auto& v : members) dims.push_back(v.dim());
  return PartitionType::from_dims(dims);
}

struct DirectionClass {
  Mask a = 0;
  Mask b = 0;         // normal of the image hyperplane
  unsigned side = 0;  // 0: image = H_b, 1: image = complement of H_b

  friend bool operator==(const DirectionClass&, const DirectionClass&) = default;
};

/// Certifies that image(D_a) is an affine hyperplane and returns its normal and side.
inline DirectionClass image_of_difference(const Vbf& f, Mask a) {
  if (f.n() != f.m()) throw InputError("image_of_difference: requires n = m");
  if (a == 0 || a >= f.domain_size()) throw InputError("image_of_difference: a must be a nonzero n-bit vector");
  const unsigned n = f.n();
  std::vector<std::uint8_t> seen(f.codomain_size(), 0);
  std::vector<Mask> image;
  image.reserve(f.domain_size() / 2);
  for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
    const Mask y = f(x) ^ f(x ^ a);
    if (!seen[y]) {
      seen[y] = 1;
      image.push_back(y);
    }
  }
  if (image.size() != f.domain_size() / 2) {
    throw NotCrooked("image of D_a for a = " + std::to_string(a) + " has " + std::to_string(image.size()) +
                         " points, not 2^(n-1)",
                     a);
  }
  const Mask y0 = image.front();
  Subspace diffs(n);
  for (Mask y : image) diffs.insert(y ^ y0);
  if (diffs.dim() != n - 1) {
    throw NotCrooked("image of D_a for a = " + std::to_string(a) + " is not an affine hyperplane", a);
  }
  const Subspace normal = orthogonal_complement(diffs);
  const Mask b = normal.basis()[0];
  return {a, b, dot(b, y0)};
}

struct PartitionMember {
  Subspace v;                  // V_b
  Subspace t;                  // T_b
  bool tbar_nonempty = false;  // the complementary coset of T_b inside V_b is used
};

struct DerivedPartition {
  unsigned n = 0;
  std::map<Mask, PartitionMember> members;  // keyed by b; only b with dim V_b >= 1

  std::vector<Subspace> subspaces() const {
    std::vector<Subspace> out;
    out.reserve(members.size());
    for (const auto& [b, m] : members) out.push_back(m.v);
    return out;
  }
};

inline DerivedPartition build_partition(const Vbf& f) {
  if (f.n() != f.m()) throw InputError("build_partition: requires n = m");
  const unsigned n = f.n();
  struct Group {
    std::vector<Mask> t;
    std::vector<Mask> tbar;
  };
  std::map<Mask, Group> groups;
  for (Mask a = 1; a < f.domain_size(); ++a) {
    const auto c = image_of_difference(f, a);
    auto& g = groups[c.b];
    (c.side == 0 ? g.t : g.tbar).push_back(a);
  }

  DerivedPartition p;
  p.n = n;
  for (auto& [b, g] : groups) {
    PartitionMember m{Subspace(n), Subspace::span(g.t, n), !g.tbar.empty()};
    if (m.t.size() != g.t.size() + 1) {
      throw StructureViolation("T_b for b = " + std::to_string(b) + " is not closed under addition");
    }
    m.v = m.t;
    if (m.tbar_nonempty) {
      const AffineSubspace coset(m.t, g.tbar.front());
      for (Mask a : g.tbar) {
        if (!coset.contains(a)) {
          throw StructureViolation("complement directions for b = " + std::to_string(b) + " are not one coset");
        }
      }
      if (g.tbar.size() != m.t.size()) {
        throw StructureViolation("complement directions for b = " + std::to_string(b) + " do not fill a coset");
      }
      m.v.insert(g.tbar.front());
    }
    const unsigned expected = m.t.dim() + (m.tbar_nonempty ? 1u : 0u);
    if (m.v.dim() != expected) throw StructureViolation("dim V_b inconsistent with T_b");
    p.members.emplace(b, m);
  }
  return p;
}

inline bool verify_partition(const DerivedPartition& p) {
  const auto subs = p.subspaces();
  return verify_cover(p.n, subs);
}

inline PartitionType partition_type(const DerivedPartition& p) {
  const auto subs = p.subspaces();
  return type_of(subs);
}

/// Amplitude exponent of F_b equals dim V_b for every nonzero b (0 when b is not a key).
inline bool verify_dim_amplitude(const Vbf& f, const DerivedPartition& p) {
  if (p.n != f.n()) return false;
  const auto ex = component_exponents(f);
  for (Mask b = 1; b < f.codomain_size(); ++b) {
    auto it = p.members.find(b);
    const unsigned dim = it == p.members.end() ? 0 : it->second.v.dim();
    if (ex[b] != dim) return false;
  }
  return true;
}

}  // namespace apnvsp
