#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "support.hpp"

using namespace apnvsp;
using testing_support::cube;

namespace {

PointSet subspace_points(const Subspace& v) {
  std::vector<Mask> pts;
  for (Mask x : v.elements()) {
    if (x) pts.push_back(x);
  }
  return PointSet(v.ambient(), pts);
}

// Nonzero cubes of GF(2^n), moved to dot-product coordinates.
std::set<Mask> dual_cubes(unsigned n) {
  const FieldSpec f(n);
  std::set<Mask> out;
  for (Mask x = 1; x < f.order(); ++x) out.insert(f.trace_dual(f.pow(x, 3)));
  return out;
}

}  // namespace

TEST(PointSet, Validation) {
  EXPECT_THROW(PointSet(3, {0}), InputError);
  EXPECT_THROW(PointSet(3, {8}), InputError);
  const PointSet s(3, {1, 2, 2});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
}

TEST(NonbentSet, CubeMatchesFieldCubes) {
  const auto n = nonbent_set(cube(6));
  EXPECT_EQ(n.size(), 21u);
  const auto expected = dual_cubes(6);
  EXPECT_EQ(std::set<Mask>(n.points().begin(), n.points().end()), expected);
}

TEST(NonbentSet, CubeEightSize) {
  const auto n = nonbent_set(cube(8));
  EXPECT_EQ(n.size(), 85u);
  EXPECT_EQ(n.size() % 4, 1u);
  const auto expected = dual_cubes(8);
  EXPECT_EQ(std::set<Mask>(n.points().begin(), n.points().end()), expected);
}

TEST(NonbentSet, BentComponentExcluded) {
  // Component b=1 is x0x1 + x2x3 (bent); component b=2 is x0 (linear).
  std::vector<Mask> t(16);
  for (Mask x = 0; x < 16; ++x) t[x] = (((x & (x >> 1)) ^ ((x >> 2) & (x >> 3))) & 1u) | ((x & 1u) << 1);
  const auto n = nonbent_set(Vbf(4, 2, t));
  EXPECT_FALSE(n.contains(1));
  EXPECT_TRUE(n.contains(2));
}

TEST(OddIntersection, CubeSixExhaustive) {
  const auto r = odd_intersection_check(nonbent_set(cube(6)), 4);
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.sampled);
  EXPECT_EQ(r.scanned, gaussian_binomial(6, 4));
  EXPECT_TRUE(odd_intersection_check(nonbent_set(cube(6)), 5).ok);
}

TEST(OddIntersection, TrivialSets) {
  EXPECT_TRUE(odd_intersection_check(PointSet::all_nonzero(5), 3).ok);
  const auto r = odd_intersection_check(PointSet(5, {}), 3);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->dim(), 3u);
}

TEST(OddIntersection, CounterexampleIsGenuine) {
  const PointSet s(5, {1, 2, 3, 4, 12});
  const auto r = odd_intersection_check(s, 2);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(s.count_in(*r.counterexample) % 2, 0u);
}

TEST(OddIntersection, CounterexampleIndependentOfThreadCount) {
  std::vector<Mask> pts;
  for (Mask x = 1; x < 256; x += 3) pts.push_back(x);
  const PointSet s(8, pts);
  ::setenv("APNVSP_THREADS", "1", 1);
  const auto one = odd_intersection_check(s, 5);
  ::setenv("APNVSP_THREADS", "4", 1);
  const auto four = odd_intersection_check(s, 5);
  ::unsetenv("APNVSP_THREADS");
  ASSERT_FALSE(one.ok);
  EXPECT_EQ(one.counterexample, four.counterexample);
  EXPECT_EQ(thread_count() >= 1, true);
}

TEST(OddIntersection, SampledRecordsSeed) {
  const auto r = odd_intersection_sampled(nonbent_set(cube(8)), 5, 2000, 77);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.sampled);
  EXPECT_EQ(r.seed, 77u);
  EXPECT_EQ(r.scanned, 2000u);
}

TEST(Blocking, Examples) {
  const auto cube_set = nonbent_set(cube(6));
  EXPECT_TRUE(is_blocking_set(cube_set, 4));
  for (unsigned k = 2; k <= 6; ++k) {
    EXPECT_TRUE(is_blocking_set(subspace_points(hyperplane(0b100101, 6)), k)) << k;
  }
  EXPECT_FALSE(is_blocking_set(subspace_points(hyperplane(0b100101, 6)), 1));
  EXPECT_FALSE(kfold_check(PointSet(6, {1, 2}), 4, 3));
  EXPECT_TRUE(kfold_check(PointSet::all_nonzero(6), 2, 3));
}

TEST(Blocking, OddImpliesBlockingAtHigherDims) {
  const auto s = nonbent_set(cube(6));
  ASSERT_TRUE(odd_intersection_check(s, 4).ok);
  EXPECT_TRUE(is_blocking_set(s, 5));
  EXPECT_TRUE(is_blocking_set(s, 6));
}

TEST(MaxSubspace, CubeSix) {
  const auto s = nonbent_set(cube(6));
  const auto w = max_subspace_in(s);
  EXPECT_GE(w.dim(), 3u);
  for (Mask x : w.elements()) EXPECT_TRUE(x == 0 || s.contains(x));

  // The subfield GF(8) consists of cubes, so its image lies in N_F.
  const FieldSpec f(6);
  std::vector<Mask> image;
  for (Mask x : f.subfield(3)) image.push_back(f.trace_dual(x));
  const auto sub = Subspace::span(image, 6);
  EXPECT_EQ(sub.dim(), 3u);
  for (Mask x : sub.elements()) EXPECT_TRUE(x == 0 || s.contains(x));
}

TEST(MaxSubspace, TrivialCases) {
  EXPECT_EQ(max_subspace_in(PointSet(5, {})).dim(), 0u);
  const auto v = Subspace::span({0b10011, 0b01100}, 5);
  EXPECT_EQ(max_subspace_in(subspace_points(v)), v);
  EXPECT_EQ(max_subspace_in(PointSet::all_nonzero(5)).dim(), 5u);
}

TEST(MaxSubspace, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Mask> pts;
    for (Mask x = 1; x < 32; ++x) {
      if (rng() % 3) pts.push_back(x);
    }
    const PointSet s(5, pts);
    unsigned best = 0;
    for (unsigned k = 1; k <= 5; ++k) {
      const bool any = !enumerate_subspaces(5, k).for_each([&](const Subspace& w) { return s.count_in(w) + 1 != w.size(); });
      if (any) best = k;
    }
    EXPECT_EQ(max_subspace_in(s).dim(), best);
  }
}

TEST(MaxSubspace, BudgetExhaustion) {
  EXPECT_THROW(max_subspace_in(nonbent_set(cube(8)), 5), BudgetExhausted);
}

TEST(Trivial, Examples) {
  EXPECT_TRUE(is_trivial_blocking(nonbent_set(cube(6)), 6));
  EXPECT_FALSE(is_trivial_blocking(nonbent_set(cube(8)), 8));
  EXPECT_TRUE(is_trivial_blocking(PointSet::all_nonzero(6), 6));
}

TEST(Minimality, CubeSixIsNotMinimal) {
  const auto r = minimality_check(nonbent_set(cube(6)), 4);
  EXPECT_FALSE(r.minimal);
  ASSERT_TRUE(r.removable.has_value());
  auto pts = nonbent_set(cube(6)).points();
  std::vector<Mask> rest;
  for (Mask p : pts) {
    if (p != *r.removable) rest.push_back(p);
  }
  EXPECT_TRUE(is_blocking_set(PointSet(6, rest), 4));
}

TEST(Minimality, SubspaceIsMinimal) {
  const auto v = Subspace::span({0b000111, 0b011001, 0b100010}, 6);
  EXPECT_TRUE(minimality_check(subspace_points(v), 4).minimal);
}

TEST(Minimality, SmallOddSetsAreMinimal) {
  // A symmetric difference of three 3-spaces in F_2^6 meets every 4-space in an odd number of points.
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 25; ++trial) {
    std::vector<std::uint8_t> in(64, 0);
    for (int i = 0; i < 3; ++i) {
      const auto u = random_subspace(6, 3, rng);
      for (Mask x : u.elements()) in[x] ^= 1;
    }
    std::vector<Mask> pts;
    for (Mask x = 1; x < 64; ++x) {
      if (in[x]) pts.push_back(x);
    }
    if (pts.size() > 14) continue;
    const PointSet s(6, pts);
    ASSERT_TRUE(odd_intersection_check(s, 4).ok);
    EXPECT_TRUE(minimality_check(s, 4).minimal);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(ComplementaryPair, FullSpace) {
  const auto p = complementary_pair_search(PointSet::all_nonzero(6));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(is_direct_complement(p->first, p->second));
}

TEST(ComplementaryPair, TooSmallHasNone) {
  // 13 < 2^4 - 2 points cannot hold two complementary subspaces of F_2^6.
  std::vector<Mask> pts;
  for (Mask x = 1; x <= 13; ++x) pts.push_back(x);
  EXPECT_FALSE(complementary_pair_search(PointSet(6, pts)).has_value());
}

TEST(ComplementaryPair, CubeSixRegression) {
  const auto s = nonbent_set(cube(6));
  const auto p = complementary_pair_search(s);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(is_direct_complement(p->first, p->second));
  EXPECT_EQ(p->first.dim() + p->second.dim(), 6u);
  for (const auto* v : {&p->first, &p->second}) {
    for (Mask x : v->elements()) EXPECT_TRUE(x == 0 || s.contains(x));
  }
}

TEST(ComplementaryPair, CubeEightHasNone) {
  EXPECT_FALSE(complementary_pair_search(nonbent_set(cube(8))).has_value());
}

TEST(Bounds, Values) {
  const auto b6 = blocking_bounds(6, 6);
  EXPECT_EQ(b6.bose_burton, 7);
  EXPECT_EQ(b6.apn_bent_bound, 10);
  EXPECT_EQ(b6.ccz_size_threshold, 21);
  const auto b8 = blocking_bounds(8, 8);
  EXPECT_EQ(b8.apn_bent_bound, 21);
  EXPECT_EQ(b8.ccz_size_threshold, 45);
  EXPECT_EQ(blocking_bounds(10, 10).apn_bent_bound, 43);
  EXPECT_FALSE(blocking_bounds(6, 4).apn_bent_bound.has_value());
}

TEST(Ccz, CubeSixSizeIsTight) {
  const auto r = ccz_necessary_report(cube(6));
  EXPECT_EQ(r.size_threshold, 21);
  EXPECT_EQ(r.n_size, 21u);
  EXPECT_TRUE(r.size_ok);
  EXPECT_EQ(r.threefold_ok, true);
  EXPECT_EQ(r.pair_status, PairStatus::found);
  EXPECT_FALSE(r.certified_not_permutation);
}

TEST(Ccz, SmallSetCertified) {
  std::vector<Mask> pts;
  for (Mask x = 1; x <= 17; ++x) pts.push_back(x);
  const auto r = ccz_necessary_report(PointSet(8, pts));
  EXPECT_EQ(r.size_threshold, 45);
  EXPECT_FALSE(r.size_ok);
  EXPECT_TRUE(r.certified_not_permutation);
}

TEST(Ccz, BudgetIsReported) {
  CczOptions opt;
  opt.budget = 3;
  opt.check_threefold = false;
  const auto r = ccz_necessary_report(nonbent_set(cube(8)), opt);
  EXPECT_EQ(r.pair_status, PairStatus::budget_exhausted);
}

TEST(Ccz, OddWidthRejected) { EXPECT_THROW(ccz_necessary_report(PointSet::all_nonzero(5)), InputError); }

TEST(Report, CubeSix) {
  const auto r = blocking_report(nonbent_set(cube(6)), 6);
  EXPECT_EQ(r.n_size, 21u);
  EXPECT_EQ(r.mod4, 1u);
  EXPECT_EQ(r.scan_dim, 4u);
  EXPECT_TRUE(r.odd.ok);
  EXPECT_TRUE(r.is_blocking);
  EXPECT_TRUE(r.is_trivial);
  EXPECT_GE(r.max_inner.dim(), 3u);
  ASSERT_TRUE(r.minimality.has_value());
  EXPECT_FALSE(r.minimality->minimal);
}

TEST(Report, CubeTenIsSampled) {
  BlockingOptions opt;
  opt.sample_budget = 3000;
  opt.seed = 5;
  opt.ccz = false;
  const auto r = blocking_report(nonbent_set(cube(10)), 10, opt);
  EXPECT_EQ(r.n_size, 341u);
  EXPECT_TRUE(r.odd.sampled);
  EXPECT_EQ(r.odd.seed, 5u);
  EXPECT_EQ(r.odd.scanned, 3000u);
  EXPECT_TRUE(r.odd.ok);
  EXPECT_FALSE(r.minimality.has_value());
}

TEST(Report, CatalogLaws) {
  for (unsigned n : {4u, 6u, 8u}) {
    for (const char* name : {"cube", "gold_3"}) {
      const auto c = catalog(name, n);
      if (!c.apn_condition || n <= 3) continue;
      const auto s = nonbent_set(c.f);
      EXPECT_EQ(s.size() % 4, 1u) << name << n;
      const auto b = blocking_bounds(n, n);
      if (b.apn_bent_bound) {
        const auto size = static_cast<std::int64_t>(s.size());
        if (n == 8) {
          EXPECT_GE(size, *b.apn_bent_bound);
        } else {
          EXPECT_GT(size, *b.apn_bent_bound);
        }
      }
      // Bose-Burton, with the equality case.
      const auto r = blocking_report(s, n);
      ASSERT_TRUE(r.is_blocking);
      EXPECT_GE(static_cast<std::int64_t>(r.n_size), r.bounds.bose_burton);
      const bool tight = static_cast<std::int64_t>(r.n_size) == r.bounds.bose_burton;
      EXPECT_EQ(tight, r.is_trivial && r.max_inner.dim() == n / 2 && r.n_size == (std::uint64_t{1} << (n / 2)) - 1);
    }
  }
}
