#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sasaki {
namespace {

using testing::Gen;

WallInvariants wall(const DegreeTuple& t) { return wall_invariants(threefold_spec(t)); }

TEST(CompleteIntersection, QuinticThreefold) {
  const auto w = wall({5});
  EXPECT_EQ(w.d, 5);
  EXPECT_EQ(w.k, 0);
  EXPECT_EQ(w.m, -20);
  EXPECT_EQ(w.e, -200);
  const auto h = ci3_hodge(w, w.d);
  EXPECT_EQ(h.h03, 1);
  EXPECT_EQ(h.h12, 101);
  EXPECT_EQ(h.b3, 204);
  EXPECT_EQ(tangent_chern_class(threefold_spec({5})).to_string(),
            "1 + 10*x1^2 - 40*x1^3 + 205*x1^4");
}

TEST(CompleteIntersection, ProjectiveThreeSpaceWithNoEquations) {
  const CompleteIntersectionSpec spec(AmbientSpace::projective(3), {});
  const auto report = chern_numbers(spec);
  const auto& t = report.threefold();
  EXPECT_EQ(t.c3, 4);
  EXPECT_EQ(t.c1cube, 64);
  EXPECT_EQ(t.c1c2, 24);
  const auto w = wall_invariants(spec);
  const auto h = ci3_hodge(w, w.d);
  EXPECT_EQ(h.h03, 0);
  EXPECT_EQ(h.h12, 0);
  EXPECT_EQ(w.e, 4);
}

TEST(CompleteIntersection, CubicSurfaceAndQuarticK3) {
  const std::vector<long> cubic = {3};
  const auto s = chern_numbers(CompleteIntersectionSpec::in_projective_space(3, cubic)).surface();
  EXPECT_EQ(s.c1sq, 3);
  EXPECT_EQ(s.c2, 9);
  const std::vector<long> quartic = {4};
  const auto k3 = chern_numbers(CompleteIntersectionSpec::in_projective_space(3, quartic)).surface();
  EXPECT_EQ(k3.c1sq, 0);
  EXPECT_EQ(k3.c2, 24);
}

TEST(CompleteIntersection, HypersurfacesAreSortedDescending) {
  const std::vector<long> degrees = {2, 7, 3};
  const auto spec = CompleteIntersectionSpec::in_projective_space(6, degrees);
  EXPECT_EQ(spec.degrees(), (std::vector<Integer>{7, 3, 2}));
  EXPECT_EQ(spec.dimension(), 3);
}

TEST(CompleteIntersection, RejectsBadInput) {
  const std::vector<long> too_many = {2, 2, 2, 2};
  EXPECT_THROW(CompleteIntersectionSpec::in_projective_space(3, too_many), DomainError);
  const std::vector<long> zero = {0};
  EXPECT_THROW(CompleteIntersectionSpec::in_projective_space(4, zero), DomainError);
  const std::vector<long> curve = {2, 2};
  EXPECT_THROW(chern_numbers(CompleteIntersectionSpec::in_projective_space(3, curve)),
               DomainError);
  const std::vector<long> linear = {1};
  EXPECT_THROW(wall_invariants(CompleteIntersectionSpec::in_projective_space(4, linear)),
               DomainError);
  EXPECT_THROW(wall_invariants(CompleteIntersectionSpec(AmbientSpace({1, 3}),
                                                         {MultiDegree{{1, 1}}})),
               DomainError);
}

TEST(CompleteIntersection, HodgeEqualOnlyForDiffeomorphicNegativePairs) {
  const auto p3 = wall_invariants(CompleteIntersectionSpec(AmbientSpace::projective(3), {}));
  EXPECT_THROW(hodge_equal(p3, p3), DomainError);
  const auto quintic = wall({5});
  EXPECT_TRUE(hodge_equal(quintic, quintic));
  const auto a = wall({70, 16, 16, 14, 7, 6});
  const auto b = wall({56, 49, 8, 6, 5, 4, 4});
  EXPECT_TRUE(are_diffeomorphic_wall(a, b));
  EXPECT_FALSE(hodge_equal(a, b));
  EXPECT_TRUE(hodge_equal(a, a));
  EXPECT_THROW(hodge_equal(a, quintic), DomainError);
}

class ThreefoldOracle : public ::testing::TestWithParam<int> {};

TEST_P(ThreefoldOracle, RingMatchesSeriesAndClosedForms) {
  Gen g(500 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = g.threefold_degrees(4, 9);
    const auto spec = threefold_spec(t);
    const std::vector<Integer> ds(t.begin(), t.end());
    const int n = 3 + static_cast<int>(t.size());
    const auto series = testing::series_chern(n, ds);

    Integer d = 1, sum = 0, sum_sq = 0;
    for (const auto& v : ds) {
      d *= v;
      sum += v;
      sum_sq += v * v;
    }
    const Integer k = n + 1 - sum;
    const Integer m = n + 1 - sum_sq;

    const auto w = wall_invariants(spec);
    const auto report = chern_numbers(spec);
    const auto& chern = report.threefold();
    EXPECT_EQ(w.d, d);
    EXPECT_EQ(w.k, k);
    EXPECT_EQ(w.m, m);
    EXPECT_EQ(series.c1, k);
    EXPECT_EQ(w.e, series.c3 * d);
    EXPECT_EQ(chern.c1c2, k * series.c2 * d);
    EXPECT_EQ(2 * chern.c1c2, k * (k * k - m) * d);
    EXPECT_EQ(chern.p1_pairing, m * d);
    EXPECT_TRUE(divides(24, chern.c1c2));

    const auto h = ci3_hodge(w, d);
    EXPECT_EQ(h.b3, 4 - w.e);
    EXPECT_FALSE(is_odd(h.b3));
    EXPECT_EQ(2 * (h.h03 + h.h12), h.b3);
    EXPECT_EQ(48 * h.chi_o, k * (k * k - m) * d);
  }
}

TEST_P(ThreefoldOracle, DiffeomorphismIsAnEquivalenceRelation) {
  Gen g(700 + GetParam());
  std::vector<WallInvariants> ws;
  for (int i = 0; i < 12; ++i) ws.push_back(wall(g.threefold_degrees(3, 6)));
  ws.push_back(ws.front());
  for (const auto& a : ws) {
    EXPECT_TRUE(are_diffeomorphic_wall(a, a));
    for (const auto& b : ws) {
      EXPECT_EQ(are_diffeomorphic_wall(a, b), are_diffeomorphic_wall(b, a));
      for (const auto& c : ws) {
        if (are_diffeomorphic_wall(a, b) && are_diffeomorphic_wall(b, c)) {
          EXPECT_TRUE(are_diffeomorphic_wall(a, c));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ThreefoldOracle, ::testing::Range(0, 10));

TEST(CompleteIntersection, WallFIsInjectiveInKForNegativeM) {
  for (long m = -400; m <= -1; ++m) {
    std::set<Integer> seen;
    for (long k = -60; k <= 60; ++k) {
      EXPECT_TRUE(seen.insert(wall_f(k, m)).second) << "k=" << k << " m=" << m;
    }
  }
}

class SurfaceOracle : public ::testing::TestWithParam<int> {};

TEST_P(SurfaceOracle, P1P2ClosedFormsMatchPipelineAndHandExpansion) {
  Gen g(100 + GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const Integer p = g.uniform(1, 50);
    const Integer q = g.uniform(1, 10);
    EXPECT_TRUE(pipeline_cross_check(p, q)) << "p=" << p << " q=" << q;
    EXPECT_EQ(p1p2_c1sq(p, q), testing::oracle_c1sq(p, 3 * q));
    EXPECT_EQ(p1p2_c2(p, q), testing::oracle_c2(p, 3 * q));
    const auto s = surface_invariants(p, q);
    EXPECT_TRUE(divides(12, s.c1sq + s.c2));
    EXPECT_EQ(s.b2 + 2, s.c2);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SurfaceOracle, ::testing::Range(0, 20));

}  // namespace
}  // namespace sasaki
