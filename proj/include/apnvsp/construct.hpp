#pragma once

// Explicit vector space partitions: t-spreads from the subfield structure of
// GF(2^n), Bu's partition of type [s^(2^(n-s)), (n-s)^1], and refinement of a
// member by a spread of that member.

#include <cstdint>
#include <string>
#include <vector>

#include "apnvsp/errors.hpp"
#include "apnvsp/field.hpp"
#include "apnvsp/gf2.hpp"
#include "apnvsp/partition.hpp"

namespace apnvsp {

struct ExplicitPartition {
  unsigned n = 0;
  std::vector<Subspace> members;

  bool verify() const { return verify_cover(n, members); }
  PartitionType type() const { return type_of(members); }
};

/// Members are the multiplicative cosets g^i * GF(2^t) of the subfield, 0 <= i < (2^n-1)/(2^t-1).
inline ExplicitPartition spread(unsigned n, unsigned t) {
  check_width(n);
  if (t == 0 || n % t != 0) throw InputError("spread: t must divide n");
  const FieldSpec field(n);
  const auto sub = field.subfield(t);
  const Subspace base = Subspace::span(sub, n);
  const Mask g = field.primitive_element();
  const std::uint64_t count = ((std::uint64_t{1} << n) - 1) / ((std::uint64_t{1} << t) - 1);

  ExplicitPartition p{n, {}};
  p.members.reserve(count);
  Mask scale = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    Subspace m(n);
    for (Mask e : base.basis()) m.insert(field.mul(scale, e));
    p.members.push_back(m);
    scale = field.mul(scale, g);
  }
  return p;
}

/// Root of `poly` inside `field`.
inline Mask find_root(const FieldSpec& field, std::uint32_t poly) {
  for (Mask x = 0; x < field.order(); ++x) {
    Mask acc = 0;
    Mask power = 1;
    for (int i = 0; i <= poly_degree(poly); ++i) {
      if ((poly >> i) & 1u) acc ^= power;
      power = field.mul(power, x);
    }
    if (acc == 0) return x;
  }
  throw StructureViolation("polynomial has no root in the field");
}

/// F_2^n = GF(2^(n-s)) x GF(2^s): the low n-s bits hold the first factor.
/// Members are U_inf = GF(2^(n-s)) x {0} and U_a = {(a * x, x)} for every a
/// in GF(2^(n-s)), with GF(2^s) embedded as a subfield.
inline ExplicitPartition bu_partition(unsigned n, unsigned s) {
  check_width(n);
  if (s == 0 || s >= n || (n - s) % s != 0) throw InputError("bu_partition: need 0 < s < n and s | (n - s)");
  const unsigned big_n = n - s;
  const FieldSpec big(big_n);
  const FieldSpec small(s);
  const Mask root = find_root(big, small.modulus());
  std::vector<Mask> embed(s);  // image of the j-th polynomial basis vector of GF(2^s)
  Mask power = 1;
  for (unsigned j = 0; j < s; ++j) {
    embed[j] = power;
    power = big.mul(power, root);
  }

  ExplicitPartition p{n, {}};
  p.members.reserve((std::size_t{1} << big_n) + 1);
  Subspace infinity(n);
  for (unsigned j = 0; j < big_n; ++j) infinity.insert(Mask{1} << j);
  p.members.push_back(infinity);
  for (Mask alpha = 0; alpha < big.order(); ++alpha) {
    Subspace m(n);
    for (unsigned j = 0; j < s; ++j) m.insert(big.mul(alpha, embed[j]) | (Mask{1} << (big_n + j)));
    p.members.push_back(m);
  }
  return p;
}

/// Image of x under the coordinate map sending unit vector j to basis[j].
inline Mask map_through_basis(Mask x, std::span<const Mask> basis) {
  Mask out = 0;
  for (unsigned j = 0; j < basis.size(); ++j) {
    if (x & (Mask{1} << j)) out ^= basis[j];
  }
  return out;
}

/// Replaces member `index` by a t-spread of it. The new members are appended.
inline ExplicitPartition refine_member(const ExplicitPartition& p, std::size_t index, unsigned t) {
  if (index >= p.members.size()) throw InputError("refine_member: index out of range");
  const Subspace& target = p.members[index];
  const unsigned d = target.dim();
  if (t == 0 || d % t != 0) {
    throw InputError("refine_member: t = " + std::to_string(t) + " does not divide dim " + std::to_string(d));
  }
  if (t == d) return p;
  const auto local = spread(d, t);
  ExplicitPartition out{p.n, {}};
  out.members.reserve(p.members.size() + local.members.size() - 1);
  for (std::size_t i = 0; i < p.members.size(); ++i) {
    if (i != index) out.members.push_back(p.members[i]);
  }
  for (const auto& m : local.members) {
    Subspace mapped(p.n);
    for (Mask r : m.basis()) mapped.insert(map_through_basis(r, target.basis()));
    out.members.push_back(mapped);
  }
  return out;
}

/// Index of the first member of dimension d, or members.size() when none.
inline std::size_t first_member_of_dim(const ExplicitPartition& p, unsigned d) {
  for (std::size_t i = 0; i < p.members.size(); ++i) {
    if (p.members[i].dim() == d) return i;
  }
  return p.members.size();
}

inline PartitionType partition_type_of(const ExplicitPartition& p) { return p.type(); }

}  // namespace apnvsp
