#pragma once

#include <string>

#include "sasaki_hodge/horikawa.hpp"
#include "sasaki_hodge/pair_search.hpp"
#include "sasaki_hodge/reference_tables.hpp"
#include "sasaki_hodge/surface_tuples.hpp"

namespace sasaki {

inline VerificationResult verify_table1(const Table1Fixture& fixture = reference_table1()) {
  VerificationResult v;
  const auto result = tuple_search(1, fixture.q_list);
  v.expect(result.n == fixture.n,
           "tuple n: computed " + to_string(result.n) + ", expected " + to_string(fixture.n));
  v.expect(result.rows.size() == fixture.rows.size(), "tuple: row count differs");
  for (std::size_t i = 0; i < std::min(result.rows.size(), fixture.rows.size()); ++i) {
    const auto& got = result.rows[i];
    const auto& want = fixture.rows[i];
    const std::string row = "tuple q=" + to_string(want.q) + " ";
    v.expect(got.q == want.q, row + "q: computed " + to_string(got.q));
    v.expect(got.p == want.p,
             row + "p: computed " + to_string(got.p) + ", expected " + to_string(want.p));
    v.expect(got.c1sq == want.c1sq, row + "c1sq: computed " + to_string(got.c1sq) +
                                        ", expected " + to_string(want.c1sq));
    v.expect(got.c1_div == want.d_c1, row + "d(c1): computed " + to_string(got.c1_div) +
                                          ", expected " + to_string(want.d_c1));
  }
  v.expect(result.groups.size() == result.rows.size(), "tuple: c1sq values coincide");
  return v;
}

/// Identities of the X_k / Z_k construction for k = 1..k_max.
inline VerificationResult verify_theorem_c(long k_max = 100) {
  VerificationResult v;
  for (long kv = 1; kv <= k_max; ++kv) {
    const Integer k = kv;
    const auto pair = theorem_c_pair(k);
    const std::string at = "X_k/Z_k k=" + std::to_string(kv) + ": ";
    v.expect(pair.xk.b2 == 80 * k + 74 && pair.zk.b2 == 80 * k + 74, at + "b2 != 80k+74");
    v.expect(pair.xk.h02 == 10 * k + 6, at + "h02(X_k) != 10k+6");
    v.expect(pair.zk.h02 == 8 * k + 6, at + "h02(Z_k) != 8k+6");
    v.expect(pair.xk.h11 == 60 * k + 62, at + "h11(X_k) != 60k+62");
    v.expect(pair.zk.h11 == 64 * k + 62, at + "h11(Z_k) != 64k+62");
    v.expect(pair.xk.c1_div == gcd(k, Integer(2)), at + "d(c1(X_k)) != gcd(k,2)");
    v.expect(!pair.zk.spin && is_odd(horikawa_spin(8 * k + 2).witness), at + "Z_k spin");
    v.expect(pair.hodge_differ, at + "Hodge numbers agree");
    const auto expected = kv % 2 == 0 ? ContactVerdict::Inequivalent : ContactVerdict::Inconclusive;
    v.expect(pair.contact_obstruction == expected, at + "unexpected Hamilton verdict");
    v.expect(pair.xk_bundle.manifold ==
                 ManifoldType{ManifoldType::Kind::SpinSum, 80 * k + 73},
             at + "total space is not #(80k+73)(S^2 x S^3)");
  }
  return v;
}

inline VerificationResult verify_tables(const Table1Fixture& t1 = reference_table1(),
                                        const Table2Fixture& t2 = reference_table2(),
                                        long theorem_c_max = 100) {
  VerificationResult v = verify_table1(t1);
  v.merge(verify_known_pairs(t2));
  v.merge(verify_theorem_c(theorem_c_max));
  return v;
}

}  // namespace sasaki
