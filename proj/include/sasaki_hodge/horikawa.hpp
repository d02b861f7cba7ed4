#pragma once

// Two surface families with equal b2 = 80k + 74 and different Hodge numbers:
//   X_k : complete intersection of bidegrees (2,5) and (k,1) in CP^1 x CP^3
//   Z_k = Y_{8k+2} : Horikawa double cover of the Hirzebruch surface
//         Sigma_{8k+2} branched along B = 6 Delta + 2(2i+3) F.
// Plus the non-spin tuple construction on top of surface_tuples.

#include <cstddef>
#include <string>
#include <vector>

#include "sasaki_hodge/boothby_wang.hpp"
#include "sasaki_hodge/complete_intersection.hpp"
#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/integer.hpp"
#include "sasaki_hodge/surface_invariants.hpp"
#include "sasaki_hodge/surface_tuples.hpp"

namespace sasaki {

/// a * Delta + b * F on the Hirzebruch surface Sigma_i.
struct HirzebruchClass {
  Integer a;
  Integer b;
  bool operator==(const HirzebruchClass&) const = default;
};

/// Intersection form with Delta^2 = -i, Delta.F = 1, F^2 = 0.
inline Integer hirzebruch_intersect(const Integer& i, const HirzebruchClass& u,
                                    const HirzebruchClass& v) {
  return -i * u.a * v.a + u.a * v.b + v.a * u.b;
}

/// Nakai-Moishezon on Sigma_i: a > 0 and b > a i.
inline bool hirzebruch_ample(const Integer& i, const HirzebruchClass& u) {
  return u.a > 0 && u.b > u.a * i;
}

inline HirzebruchClass horikawa_branch_locus(const Integer& i) { return {6, 2 * (2 * i + 3)}; }
inline HirzebruchClass horikawa_half_branch(const Integer& i) { return {3, 2 * i + 3}; }
inline HirzebruchClass hirzebruch_fibre() { return {0, 1}; }
inline HirzebruchClass hirzebruch_zero_section() { return {1, 0}; }

struct SpinTest {
  bool spin = false;
  /// (B/2).F; odd means B/2 is not divisible by 2.
  Integer witness;
};

inline SpinTest horikawa_spin(const Integer& i) {
  SpinTest t;
  t.witness = hirzebruch_intersect(i, horikawa_half_branch(i), hirzebruch_fibre());
  t.spin = !is_odd(t.witness);
  if (t.spin) throw IntegrityError("Horikawa half branch locus meets F evenly");
  return t;
}

/// Invariants of the Horikawa surface Y_i. c1 is recorded in the one-element
/// basis of the primitive canonical direction: c1 = -1 * K/d(K) with d(K) = 1.
inline SurfaceInvariants horikawa_invariants(const Integer& i) {
  if (i < 1) throw DomainError("Horikawa family needs i >= 1");
  const auto spin = horikawa_spin(i);
  auto s = SurfaceInvariants::from_chern_data({-1}, 2 * i + 4, 10 * i + 56, true, spin.spin);
  if (s.chi_o != i + 5 || s.b2 != 10 * i + 54) {
    throw IntegrityError("Horikawa invariants violate chi = i + 5 or b2 = 10i + 54");
  }
  return s;
}

inline CompleteIntersectionSpec xk_spec(const Integer& k) {
  return CompleteIntersectionSpec(AmbientSpace({1, 3}),
                                  {MultiDegree{{2, 5}}, MultiDegree{{k, 1}}});
}

/// Invariants of X_k from the closed forms, cross-checked against adjunction.
inline SurfaceInvariants xk_invariants(const Integer& k) {
  if (k < 1) throw DomainError("X_k family needs k >= 1");
  auto s = SurfaceInvariants::from_chern_data({-k, -2}, 40 * k + 8, 80 * k + 76, true);
  if (s.chi_o != 10 * k + 7 || s.h02 != 10 * k + 6 || s.h11 != 60 * k + 62) {
    throw IntegrityError("X_k closed forms are inconsistent");
  }
  if (s.c1_div != gcd(k, Integer(2))) throw IntegrityError("d(c1(X_k)) differs from gcd(k, 2)");
  const auto report = chern_numbers(xk_spec(k));
  if (report.c1.linear_coefficients() != s.c1_coeffs || report.surface().c1sq != s.c1sq ||
      report.surface().c2 != s.c2) {
    throw IntegrityError("X_k closed forms disagree with the adjunction pipeline");
  }
  return s;
}

struct TheoremCPair {
  Integer k;
  SurfaceInvariants xk;
  SurfaceInvariants zk;
  BoothbyWangReport xk_bundle;
  BoothbyWangReport zk_bundle;
  bool hodge_differ = false;
  ContactVerdict contact_obstruction = ContactVerdict::Inconclusive;
};

/// Boothby-Wang bundles over X_k and Z_k with primitive canonical Euler classes.
inline TheoremCPair theorem_c_pair(const Integer& k) {
  if (k < 1) throw DomainError("theorem_c_pair needs k >= 1");
  TheoremCPair pair;
  pair.k = k;
  pair.xk = xk_invariants(k);
  pair.zk = horikawa_invariants(8 * k + 2);
  if (pair.xk.b2 != pair.zk.b2 || pair.xk.c2 != pair.zk.c2) {
    throw IntegrityError("X_k and Z_k have different b2 or c2");
  }
  pair.xk_bundle = bw_classify({pair.xk, canonical_euler_class(pair.xk)});
  pair.zk_bundle = bw_classify({pair.zk, canonical_euler_class(pair.zk)});
  pair.hodge_differ = pair.xk.h02 != pair.zk.h02;
  pair.contact_obstruction = hamilton_obstruction(pair.xk_bundle, pair.zk_bundle);
  return pair;
}

struct NonSpinEntry {
  HypersurfaceP1P2 surface;
  SurfaceInvariants inv;
  std::vector<Integer> euler_class;
  BoothbyWangReport bundle;
};

struct NonSpinTuple {
  TupleSearchResult search;
  std::vector<NonSpinEntry> entries;
};

/// k non-spin hypersurfaces with equal c2 and distinct Hodge numbers, each with
/// Euler class a x1 + b x2 (b even, gcd(a, b) = 1), giving non-spin total spaces.
inline NonSpinTuple nonspin_tuple(std::size_t k, const Integer& a = 1, const Integer& b = 2) {
  if (a <= 0 || b <= 0) throw DomainError("Euler class coefficients must be positive");
  if (is_odd(b)) throw DomainError("Euler class coefficient b must be even");
  if (gcd(a, b) != 1) throw DomainError("Euler class coefficients must be coprime");
  NonSpinTuple out;
  out.search = tuple_search(k, std::nullopt, /*even_only=*/true);
  for (const auto& s : distinct_tuple(out.search, k)) {
    NonSpinEntry e;
    e.surface = s;
    e.inv = surface_invariants(s.p, s.q);
    e.euler_class = {a, b};
    if (e.inv.spin) throw IntegrityError("even q produced a spin surface");
    e.bundle = bw_classify({e.inv, e.euler_class});
    if (e.bundle.manifold.kind != ManifoldType::Kind::NonSpinSum) {
      throw IntegrityError("Euler class and c1 agree mod 2");
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace sasaki
