#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace apnvsp;
using testing_support::cube;
using testing_support::random_quadratic;
using testing_support::random_vbf;

namespace {

// F(x) = (x0, x0 x1) on n = 2.
Vbf two_bit_example() { return Vbf(2, 2, {0b00, 0b01, 0b00, 0b11}); }

}  // namespace

TEST(Vbf, Validation) {
  EXPECT_THROW(Vbf(2, 2, {0, 1, 2}), InputError);
  EXPECT_THROW(Vbf(2, 2, {0, 1, 2, 4}), InputError);
  EXPECT_THROW(Vbf(0, 2, {0}), InputError);
  EXPECT_THROW(Vbf(17, 2, {}), InputError);
  EXPECT_NO_THROW(Vbf(2, 2, {0, 1, 2, 3}));
}

TEST(Walsh, TrivialComponent) {
  std::mt19937_64 rng(2);
  const auto f = random_vbf(5, 4, rng);
  const auto row = walsh_row(f, 0);
  EXPECT_EQ(row[0], 32);
  for (std::size_t a = 1; a < row.size(); ++a) EXPECT_EQ(row[a], 0);
  EXPECT_EQ(walsh_naive(f, 0, 0), 32);
}

TEST(Walsh, LinearComponentRow) {
  const auto row = walsh_row(two_bit_example(), 0b01);
  EXPECT_EQ(row, (std::vector<std::int32_t>{0, 4, 0, 0}));
}

TEST(Walsh, MatchesNaiveOnRandomInputs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + rng() % 6;
    const unsigned m = 1 + rng() % 6;
    const auto f = random_vbf(n, m, rng);
    const Mask b = static_cast<Mask>(rng() & full_mask(m));
    const auto row = walsh_row(f, b);
    for (Mask a = 0; a < f.domain_size(); ++a) ASSERT_EQ(row[a], walsh_naive(f, b, a));
  }
}

TEST(Walsh, Parseval) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + rng() % 8;
    const auto f = random_vbf(n, n, rng);
    for (Mask b = 0; b < f.codomain_size(); ++b) {
      std::int64_t sum = 0;
      for (auto w : walsh_row(f, b)) sum += std::int64_t{w} * w;
      ASSERT_EQ(sum, std::int64_t{1} << (2 * n));
    }
  }
}

TEST(Walsh, MagnitudesInvariantUnderAffineAddition) {
  std::mt19937_64 rng(44);
  const auto f = random_vbf(5, 5, rng);
  const auto a3 = random_affine(5, 5, 9);
  std::vector<Mask> t(32);
  for (Mask x = 0; x < 32; ++x) t[x] = f(x) ^ a3.apply(x);
  const Vbf g(5, 5, t);
  for (Mask b = 0; b < 32; ++b) {
    auto rf = walsh_row(f, b), rg = walsh_row(g, b);
    for (auto& w : rf) w = std::abs(w);
    for (auto& w : rg) w = std::abs(w);
    std::sort(rf.begin(), rf.end());
    std::sort(rg.begin(), rg.end());
    EXPECT_EQ(rf, rg);
  }
}

TEST(Amplitude, TwoVariableExamples) {
  const auto f = two_bit_example();
  EXPECT_EQ(amplitude(f, 0b10), 2);
  EXPECT_TRUE(is_plateaued(f, 0b10));
  EXPECT_EQ(component_exponent(f, 0b10), 0u);
  EXPECT_EQ(amplitude(f, 0b01), 4);
  EXPECT_EQ(component_exponent(f, 0b01), 2u);
}

TEST(Amplitude, CubeComponentsPlateaued) {
  const auto f = cube(6);
  for (Mask b = 1; b < 64; ++b) EXPECT_TRUE(is_plateaued(f, b));
}

TEST(Amplitude, NonPlateauedThrows) {
  // x^7 on n = 6 has degree 3 and a non-plateaued component.
  const auto f = monomial_vbf(FieldSpec(6), 7);
  bool found = false;
  for (Mask b = 1; b < 64 && !found; ++b) found = !is_plateaued(f, b);
  ASSERT_TRUE(found);
  EXPECT_THROW(amplitude_distribution(f), NotPlateaued);
}

TEST(Amplitude, SupportSizeMatchesExponent) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_quadratic(6, rng);
    for (Mask b = 1; b < 64; ++b) {
      const auto p = component_profile(f, b);
      ASSERT_TRUE(p.plateaued);
      const unsigned l = exponent_of(p, 6, b);
      EXPECT_EQ(p.support, 1u << (6 - l));
    }
  }
}

TEST(Distribution, CubeExamples) {
  EXPECT_EQ(amplitude_distribution(cube(6)).to_string(), "[0^42,2^21]");
  EXPECT_EQ(amplitude_distribution(cube(8)).to_string(), "[0^170,2^85]");
  const auto d = amplitude_distribution(cube(6));
  EXPECT_EQ(d.total(), 63u);
  EXPECT_EQ(d.count(0), 42u);
  EXPECT_EQ(d.count(2), 21u);
  EXPECT_EQ(d.count(4), 0u);
  EXPECT_EQ(d.linearity_log2(), 4u);
}

TEST(Distribution, BentFunctionHasOnlyZeroExponents) {
  // x0 x1 + x2 x3 as a single-output function.
  std::vector<Mask> t(16);
  for (Mask x = 0; x < 16; ++x) t[x] = ((x & (x >> 1)) ^ ((x >> 2) & (x >> 3))) & 1u;
  const auto d = amplitude_distribution(Vbf(4, 1, t));
  EXPECT_EQ(d.to_string(), "[0^1]");
}

TEST(Degree, Examples) {
  EXPECT_EQ(algebraic_degree(identity_vbf(4)), 1u);
  EXPECT_EQ(algebraic_degree(Vbf(3, 2, std::vector<Mask>(8, 2))), 0u);
  EXPECT_EQ(algebraic_degree(Vbf(3, 2, std::vector<Mask>(8, 0))), 0u);
  for (unsigned n = 2; n <= 10; ++n) EXPECT_EQ(algebraic_degree(cube(n)), 2u) << n;
  EXPECT_TRUE(is_quadratic(cube(7)));
  EXPECT_EQ(algebraic_degree(monomial_vbf(FieldSpec(6), 7)), 3u);
}

TEST(Degree, AnfInvolution) {
  std::mt19937_64 rng(46);
  std::vector<std::uint8_t> bits(64);
  for (auto& b : bits) b = rng() & 1u;
  EXPECT_EQ(anf(anf(bits)), bits);
}

TEST(Ddt, Examples) {
  const auto f = cube(6);
  const auto t = ddt(f);
  EXPECT_EQ(t[0], 64u);
  for (std::size_t i = 1; i < 64; ++i) EXPECT_EQ(t[i], 0u);
  EXPECT_EQ(differential_uniformity(f), 2u);
  EXPECT_TRUE(is_apn(f));
  EXPECT_EQ(differential_uniformity(identity_vbf(4)), 16u);
  EXPECT_FALSE(is_apn(identity_vbf(4)));
}

TEST(Ddt, RowsSumToDomainSize) {
  std::mt19937_64 rng(47);
  const auto f = random_vbf(5, 3, rng);
  for (Mask a = 0; a < 32; ++a) {
    std::uint64_t s = 0;
    for (auto c : ddt_row(f, a)) s += c;
    EXPECT_EQ(s, 32u);
  }
}

TEST(FourthMoment, Examples) {
  EXPECT_TRUE(fourth_moment_check(cube(6)));
  EXPECT_TRUE(fourth_moment_check(cube(8)));
  EXPECT_FALSE(fourth_moment_check(identity_vbf(4)));
  EXPECT_THROW(fourth_moment_check(Vbf(2, 1, {0, 0, 0, 1})), InputError);
}

TEST(FourthMoment, AgreesWithDdtOnRandomQuadratics) {
  std::mt19937_64 rng(48);
  int apn = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + trial % 5;
    const auto f = random_quadratic(n, rng);
    EXPECT_EQ(fourth_moment_check(f), is_apn(f));
    apn += is_apn(f);
  }
  EXPECT_GT(apn, 0);
}

TEST(OneBig, CatalogFunctionsRespectIt) {
  for (unsigned n : {4u, 6u, 8u}) {
    for (const char* name : {"cube", "gold_3"}) {
      if (std::string(name) == "gold_3" && n == 6) continue;
      const auto f = catalog(name, n).f;
      if (!is_apn(f)) continue;
      const auto ex = component_exponents(f);
      const unsigned l = *std::max_element(ex.begin() + 1, ex.end());
      if (2 * l <= n) continue;
      EXPECT_EQ(std::count(ex.begin() + 1, ex.end(), l), 1);
      for (Mask b = 1; b < f.codomain_size(); ++b) {
        if (ex[b] != l) {
          EXPECT_LE(ex[b], n - l);
        }
      }
    }
  }
}
