#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "apnvsp/apnvsp.hpp"

namespace testing_support {

using apnvsp::Mask;
using apnvsp::Vbf;

inline Vbf random_vbf(unsigned n, unsigned m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Mask> pick(0, apnvsp::full_mask(m));
  std::vector<Mask> t(std::size_t{1} << n);
  for (auto& v : t) v = pick(rng);
  return Vbf(n, m, std::move(t));
}

/// Every output bit a random polynomial of degree <= 2 in the input bits.
inline Vbf random_quadratic(unsigned n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Mask> t(std::size_t{1} << n, 0);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<std::pair<unsigned, unsigned>> quad;
    std::vector<unsigned> lin;
    for (unsigned i = 0; i < n; ++i) {
      if (coin(rng)) lin.push_back(i);
      for (unsigned k = i + 1; k < n; ++k) {
        if (coin(rng)) quad.emplace_back(i, k);
      }
    }
    const bool c = coin(rng);
    for (Mask x = 0; x < t.size(); ++x) {
      unsigned bit = c;
      for (unsigned i : lin) bit ^= (x >> i) & 1u;
      for (auto [i, k] : quad) bit ^= ((x >> i) & (x >> k)) & 1u;
      t[x] |= static_cast<Mask>(bit) << j;
    }
  }
  return Vbf(n, n, std::move(t));
}

inline Vbf cube(unsigned n) { return apnvsp::catalog("cube", n).f; }

}  // namespace testing_support
