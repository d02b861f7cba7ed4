#pragma once

// Tuples of hypersurfaces of bidegree (p, 3q) in CP^1 x CP^2 with a common
// Euler number c2 = 3n and pairwise distinct c1^2. The common n solves
//   n = 6q(1 - q)  mod (3q - 1)^2
// simultaneously for pairwise coprime 3q - 1, by the Chinese Remainder Theorem.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sasaki_hodge/complete_intersection.hpp"
#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/integer.hpp"
#include "sasaki_hodge/surface_invariants.hpp"

namespace sasaki {

struct HypersurfaceP1P2 {
  Integer p;
  Integer q;

  bool ample_canonical() const { return p > 2 && q > 1; }
  bool operator==(const HypersurfaceP1P2&) const = default;
};

/// Closed-form c1 = (2 - p) x1 + (3 - 3q) x2.
inline std::vector<Integer> p1p2_c1(const Integer& p, const Integer& q) {
  return {2 - p, 3 - 3 * q};
}

/// c1^2 = 9(q - 1)(3pq - p - 4q)
inline Integer p1p2_c1sq(const Integer& p, const Integer& q) {
  return 9 * (q - 1) * (3 * p * q - p - 4 * q);
}

/// c2 = 3(p(3q - 1)^2 - 6q(q - 1))
inline Integer p1p2_c2(const Integer& p, const Integer& q) {
  const Integer m = 3 * q - 1;
  return 3 * (p * m * m - 6 * q * (q - 1));
}

inline SurfaceInvariants surface_invariants(const Integer& p, const Integer& q) {
  if (p < 1 || q < 1) throw DomainError("surface_invariants needs p >= 1 and q >= 1");
  HypersurfaceP1P2 h{p, q};
  return SurfaceInvariants::from_chern_data(p1p2_c1(p, q), p1p2_c1sq(p, q), p1p2_c2(p, q),
                                            h.ample_canonical());
}

inline CompleteIntersectionSpec p1p2_hypersurface(const Integer& p, const Integer& q) {
  return CompleteIntersectionSpec(AmbientSpace({1, 2}), {MultiDegree{{p, 3 * q}}});
}

/// True iff the adjunction pipeline reproduces the closed forms for c1, c1^2 and c2.
inline bool pipeline_cross_check(const Integer& p, const Integer& q) {
  if (p < 1 || q < 1) throw DomainError("pipeline_cross_check needs p >= 1 and q >= 1");
  const auto spec = p1p2_hypersurface(p, q);
  const auto report = chern_numbers(spec);
  return report.c1.linear_coefficients() == p1p2_c1(p, q) &&
         report.surface().c1sq == p1p2_c1sq(p, q) && report.surface().c2 == p1p2_c2(p, q);
}

inline bool pairwise_coprime(std::span<const Integer> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (gcd(values[i], values[j]) != 1) return false;
    }
  }
  return true;
}

/// First `count` values q >= 2 (greedy, ascending) whose 3q - 1 are pairwise
/// coprime. With even_only, only even q are considered, which makes every 3q - 1 odd.
inline std::vector<Integer> coprime_q_selection(std::size_t count, bool even_only = false) {
  if (count < 1) throw DomainError("coprime_q_selection needs count >= 1");
  std::vector<Integer> qs;
  std::vector<Integer> moduli;
  for (Integer q = 2; qs.size() < count; q += even_only ? 2 : 1) {
    const Integer m = 3 * q - 1;
    bool ok = std::all_of(moduli.begin(), moduli.end(),
                          [&](const Integer& other) { return gcd(m, other) == 1; });
    if (ok) {
      qs.push_back(q);
      moduli.push_back(m);
    }
  }
  return qs;
}

struct Congruence {
  Integer residue;
  Integer modulus;
};

/// Unique n in [1, prod moduli] satisfying every congruence. Moduli must be
/// pairwise coprime and at least 2.
inline Integer crt_smallest_positive(std::span<const Congruence> system) {
  if (system.empty()) throw DomainError("empty congruence system");
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].modulus < 2) throw DomainError("CRT moduli must be >= 2");
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if (gcd(system[i].modulus, system[j].modulus) != 1) {
        throw DomainError("CRT moduli " + to_string(system[i].modulus) + " and " +
                          to_string(system[j].modulus) + " are not coprime");
      }
    }
  }
  Integer x = 0;
  Integer big_m = 1;
  for (const auto& [residue, modulus] : system) {
    // x + big_m * t = residue (mod modulus)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), big_m.get_mpz_t(), modulus.get_mpz_t());
    const Integer t = mod_floor((residue - x) * inv, modulus);
    x += big_m * t;
    big_m *= modulus;
  }
  x = mod_floor(x, big_m);
  return x == 0 ? big_m : x;
}

/// The congruence n = 6q(1 - q) mod (3q - 1)^2 forcing c2 = 3n.
inline Congruence euler_congruence(const Integer& q) {
  const Integer m = 3 * q - 1;
  return Congruence{6 * q * (1 - q), m * m};
}

struct TupleRow {
  Integer q;
  Integer p;
  Integer c1sq;
  Integer c2;
  Integer c1_div;

  bool operator==(const TupleRow&) const = default;
};

/// Solves c2 = 3n for p and evaluates c1^2, cross-checking both closed forms.
inline TupleRow tuple_row(const Integer& q, const Integer& n) {
  if (q < 1) throw DomainError("tuple_row needs q >= 1");
  const Integer m = 3 * q - 1;
  TupleRow row;
  row.q = q;
  row.p = exact_div(n + 6 * q * (q - 1), m * m, "p = (n + 6q(q-1)) / (3q-1)^2");
  row.c1sq = exact_div(9 * (q - 1) * (n - 2 * q * (3 * q + 1)), m,
                       "c1^2 = 9(q-1)(n - 2q(3q+1)) / (3q-1)");
  row.c2 = 3 * n;
  row.c1_div = gcd(row.p - 2, 3 * q - 3);
  if (row.p < 1) throw IntegrityError("tuple_row produced p < 1 for q = " + to_string(q));
  const auto inv = surface_invariants(row.p, q);
  if (inv.c2 != row.c2) throw IntegrityError("tuple_row: c2 closed form disagrees with 3n");
  if (inv.c1sq != row.c1sq) throw IntegrityError("tuple_row: c1^2 closed forms disagree");
  return row;
}

struct TupleSearchResult {
  std::vector<Integer> q_list;
  Integer n;
  std::vector<TupleRow> rows;
  /// Indices into rows, grouped by equal c1^2, in order of first appearance.
  std::vector<std::vector<std::size_t>> groups;

  bool operator==(const TupleSearchResult&) const = default;
};

/// Builds the tuple for 3k greedy q values, or for q_override when given.
inline TupleSearchResult tuple_search(std::size_t k,
                                      std::optional<std::vector<Integer>> q_override = {},
                                      bool even_only = false) {
  if (k < 1) throw DomainError("tuple_search needs k >= 1");
  TupleSearchResult result;
  if (q_override) {
    result.q_list = *q_override;
    if (result.q_list.empty()) throw DomainError("empty q list");
    for (const auto& q : result.q_list) {
      if (q < 1) throw DomainError("q values must be >= 1");
    }
  } else {
    result.q_list = coprime_q_selection(3 * k, even_only);
  }
  std::sort(result.q_list.begin(), result.q_list.end());

  std::vector<Integer> moduli;
  std::vector<Congruence> system;
  for (const auto& q : result.q_list) {
    moduli.push_back(3 * q - 1);
    system.push_back(euler_congruence(q));
  }
  if (!pairwise_coprime(moduli)) throw DomainError("the numbers 3q - 1 are not pairwise coprime");

  result.n = crt_smallest_positive(system);
  std::map<Integer, std::size_t> group_of;
  for (const auto& q : result.q_list) {
    result.rows.push_back(tuple_row(q, result.n));
    const auto& row = result.rows.back();
    auto [it, inserted] = group_of.try_emplace(row.c1sq, result.groups.size());
    if (inserted) result.groups.emplace_back();
    result.groups[it->second].push_back(result.rows.size() - 1);
  }
  // A fixed c1^2 pins q to a root of a cubic, so each group has at most 3 rows.
  const std::size_t min_groups = (result.q_list.size() + 2) / 3;
  if (result.groups.size() < min_groups) {
    throw IntegrityError("fewer c1^2 groups than the cubic-root bound allows");
  }
  return result;
}

/// One representative per c1^2 group: k surfaces with equal c2 and distinct c1^2.
inline std::vector<HypersurfaceP1P2> distinct_tuple(const TupleSearchResult& result, std::size_t k) {
  if (result.groups.size() < k) {
    throw DomainError("only " + std::to_string(result.groups.size()) +
                      " distinct c1^2 values, need " + std::to_string(k));
  }
  std::vector<HypersurfaceP1P2> out;
  for (std::size_t g = 0; g < k; ++g) {
    const auto& row = result.rows[result.groups[g].front()];
    out.push_back(HypersurfaceP1P2{row.p, row.q});
  }
  return out;
}

}  // namespace sasaki
