#pragma once

// GF(2^n) in a polynomial basis: element i stands for sum_j i_j alpha^j where
// alpha is a root of the modulus. Addition is XOR.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "apnvsp/errors.hpp"
#include "apnvsp/gf2.hpp"
#include "apnvsp/vbf.hpp"

namespace apnvsp {

/// Carry-less product of two polynomials over GF(2).
constexpr std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

constexpr int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

/// Remainder of a divided by m over GF(2).
constexpr std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

/// Exhaustive trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible(std::uint64_t poly) {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  for (std::uint64_t d = 2; poly_degree(d) <= deg / 2; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

/// Smallest irreducible polynomial of degree n (as an integer).
inline std::uint32_t smallest_irreducible(unsigned n) {
  for (std::uint64_t p = (std::uint64_t{1} << n) | 1u; p < (std::uint64_t{1} << (n + 1)); p += 2) {
    if (is_irreducible(p)) return static_cast<std::uint32_t>(p);
  }
  throw StructureViolation("no irreducible polynomial of degree " + std::to_string(n));
}

inline std::uint32_t default_modulus(unsigned n) {
  check_width(n);
  switch (n) {
    case 6: return 0x43;    // X^6 + X + 1
    case 8: return 0x11B;   // X^8 + X^4 + X^3 + X + 1
    case 10: return 0x409;  // X^10 + X^3 + 1
    default: return smallest_irreducible(n);
  }
}

class FieldSpec {
 public:
  explicit FieldSpec(unsigned n) : FieldSpec(n, default_modulus(n)) {}
  FieldSpec(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    check_width(n);
    if (poly_degree(modulus) != static_cast<int>(n)) throw InputError("modulus must have degree n");
    if (!is_irreducible(modulus)) throw InputError("modulus " + std::to_string(modulus) + " is reducible");
  }

  unsigned n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << n_; }

  Mask mul(Mask a, Mask b) const { return static_cast<Mask>(poly_mod(clmul(a, b), modulus_)); }

  Mask pow(Mask a, std::uint64_t e) const {
    Mask r = 1;
    while (e) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Absolute trace a + a^2 + ... + a^(2^(n-1)), always 0 or 1.
  unsigned trace(Mask a) const {
    Mask t = 0;
    Mask x = a;
    for (unsigned i = 0; i < n_; ++i) {
      t ^= x;
      x = mul(x, x);
    }
    if (t > 1) throw StructureViolation("trace left the prime field");
    return t;
  }

  /// The b with <b, y> = Tr(beta * y) for every y.
  Mask trace_dual(Mask beta) const {
    Mask b = 0;
    for (unsigned j = 0; j < n_; ++j) {
      if (trace(mul(beta, Mask{1} << j))) b |= Mask{1} << j;
    }
    return b;
  }

  /// A generator of the multiplicative group, the smallest one by integer value.
  Mask primitive_element() const {
    const std::uint64_t group = order() - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t rest = group;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    }
    if (rest > 1) primes.push_back(rest);
    for (Mask g = 2; g < order(); ++g) {
      bool ok = pow(g, group) == 1;
      for (auto p : primes) ok = ok && pow(g, group / p) != 1;
      if (ok) return g;
    }
    if (n_ == 1) return 1;
    throw StructureViolation("no primitive element found");
  }

  /// The subfield GF(2^t) as a sorted list of elements; requires t | n.
  std::vector<Mask> subfield(unsigned t) const {
    if (t == 0 || n_ % t != 0) throw InputError("subfield: t must divide n");
    std::vector<Mask> out;
    for (Mask x = 0; x < order(); ++x) {
      if (pow(x, std::uint64_t{1} << t) == x) out.push_back(x);
    }
    return out;
  }

 private:
  unsigned n_;
  std::uint32_t modulus_;
};

/// x -> x^d as a function on n-bit vectors.
inline Vbf monomial_vbf(const FieldSpec& spec, std::uint64_t d) {
  std::vector<Mask> t(spec.order());
  for (Mask x = 0; x < spec.order(); ++x) t[x] = spec.pow(x, d);
  return Vbf(spec.n(), spec.n(), std::move(t));
}

}  // namespace apnvsp
