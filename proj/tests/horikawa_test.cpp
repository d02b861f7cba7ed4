#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sasaki {
namespace {

TEST(Horikawa, SmallestMember) {
  const auto y = horikawa_invariants(1);
  EXPECT_EQ(y.c1sq, 6);
  EXPECT_EQ(y.c2, 66);
  EXPECT_EQ(y.chi_o, 6);
  EXPECT_EQ(y.b2, 64);
  EXPECT_EQ(y.h02, 5);
  EXPECT_EQ(y.h11, 54);
  EXPECT_FALSE(y.spin);
  EXPECT_EQ(y.c1_div, 1);
}

TEST(Horikawa, NoetherLineAndSpinWitness) {
  for (long iv = 1; iv <= 300; ++iv) {
    const Integer i = iv;
    const auto y = horikawa_invariants(i);
    EXPECT_EQ(y.c1sq, 2 * y.chi_o - 6);
    EXPECT_EQ(y.b2, 10 * i + 54);
    EXPECT_TRUE(divides(12, y.c1sq + y.c2));
    const auto t = horikawa_spin(i);
    EXPECT_EQ(t.witness,
              hirzebruch_intersect(i, horikawa_half_branch(i), hirzebruch_fibre()));
    EXPECT_TRUE(is_odd(t.witness));
    EXPECT_FALSE(t.spin);
  }
}

TEST(Horikawa, HirzebruchIntersectionForm) {
  const Integer i = 4;
  const auto delta = hirzebruch_zero_section();
  const auto f = hirzebruch_fibre();
  EXPECT_EQ(hirzebruch_intersect(i, delta, delta), -4);
  EXPECT_EQ(hirzebruch_intersect(i, delta, f), 1);
  EXPECT_EQ(hirzebruch_intersect(i, f, f), 0);
  const HirzebruchClass u{2, 7}, v{3, -1};
  EXPECT_EQ(hirzebruch_intersect(i, u, v), hirzebruch_intersect(i, v, u));
}

TEST(Horikawa, BranchLocusAmpleness) {
  // The branch class 6 Delta + (4i + 6) F is ample exactly while 4i + 6 > 6i.
  EXPECT_TRUE(hirzebruch_ample(1, horikawa_branch_locus(1)));
  EXPECT_TRUE(hirzebruch_ample(2, horikawa_branch_locus(2)));
  for (long i = 3; i <= 50; ++i) EXPECT_FALSE(hirzebruch_ample(i, horikawa_branch_locus(i)));
  EXPECT_FALSE(hirzebruch_ample(1, hirzebruch_fibre()));
}

TEST(Horikawa, XkMatchesAdjunction) {
  for (long kv = 1; kv <= 30; ++kv) {
    const Integer k = kv;
    const auto x = xk_invariants(k);
    const auto report = chern_numbers(xk_spec(k));
    EXPECT_EQ(report.c1.linear_coefficients(), (std::vector<Integer>{-k, -2}));
    EXPECT_EQ(report.surface().c1sq, 40 * k + 8);
    EXPECT_EQ(report.surface().c2, 80 * k + 76);
    EXPECT_EQ(x.spin, !is_odd(k));
  }
}

TEST(Horikawa, XkZkPairForSmallK) {
  const auto p1 = theorem_c_pair(1);
  EXPECT_EQ(p1.xk.b2, 154);
  EXPECT_EQ(p1.zk.b2, 154);
  EXPECT_EQ(p1.xk.h02, 16);
  EXPECT_EQ(p1.zk.h02, 14);
  EXPECT_EQ(p1.contact_obstruction, ContactVerdict::Inconclusive);
  EXPECT_EQ(p1.xk_bundle.manifold.to_string(), "SpinSum(153)");

  const auto p2 = theorem_c_pair(2);
  EXPECT_EQ(p2.contact_obstruction, ContactVerdict::Inequivalent);
  EXPECT_EQ(p2.xk_bundle.manifold.to_string(), "SpinSum(233)");
  EXPECT_EQ(p2.zk_bundle.manifold, p2.xk_bundle.manifold);
  EXPECT_TRUE(p2.hodge_differ);
  EXPECT_TRUE(p2.xk_bundle.negative_type);
  EXPECT_TRUE(p2.zk_bundle.negative_type);
}

TEST(Horikawa, XkZkIdentitySuite) {
  const auto v = verify_theorem_c(100);
  EXPECT_TRUE(v.ok);
  for (const auto& d : v.diffs) ADD_FAILURE() << d;
}

TEST(Horikawa, NonSpinTuple) {
  const auto t = nonspin_tuple(3);
  ASSERT_EQ(t.entries.size(), 3u);
  std::set<Integer> h02;
  for (const auto& e : t.entries) {
    EXPECT_FALSE(is_odd(e.surface.q));
    EXPECT_FALSE(e.inv.spin);
    EXPECT_EQ(e.inv.c2, 3 * t.search.n);
    EXPECT_EQ(e.bundle.manifold.kind, ManifoldType::Kind::NonSpinSum);
    EXPECT_EQ(e.bundle.manifold, t.entries.front().bundle.manifold);
    h02.insert(e.inv.h02);
  }
  EXPECT_EQ(h02.size(), 3u);
}

TEST(Horikawa, NonSpinTupleRejectsBadEulerClass) {
  EXPECT_THROW(nonspin_tuple(1, 1, 3), DomainError);
  EXPECT_THROW(nonspin_tuple(1, 2, 4), DomainError);
  EXPECT_THROW(nonspin_tuple(1, 0, 2), DomainError);
}

TEST(Horikawa, RejectsNonPositiveIndices) {
  EXPECT_THROW(horikawa_invariants(0), DomainError);
  EXPECT_THROW(xk_invariants(0), DomainError);
  EXPECT_THROW(theorem_c_pair(0), DomainError);
}

}  // namespace
}  // namespace sasaki
