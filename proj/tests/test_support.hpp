#pragma once

// Seeded generators and independent oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sasaki_hodge/sasaki_hodge.hpp"

namespace sasaki::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }

  Integer big(int digits) {
    Integer v = 0;
    for (int i = 0; i < digits; ++i) v = 10 * v + uniform(0, 9);
    return coin() ? Integer(-v) : v;
  }

  AmbientSpace ambient(int max_factors, int max_dim) {
    std::vector<int> dims(uniform(1, max_factors));
    for (auto& d : dims) d = static_cast<int>(uniform(1, max_dim));
    return AmbientSpace(dims);
  }

  CohomologyClass element(const AmbientSpace& a, long coeff_bound, int terms = 6) {
    CohomologyClass c(a);
    for (int t = 0; t < terms; ++t) {
      Exponent e(a.factors());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<int>(uniform(0, a.factor_dims()[i]));
      }
      c += CohomologyClass::monomial(a, e, uniform(-coeff_bound, coeff_bound));
    }
    return c;
  }

  CohomologyClass unit(const AmbientSpace& a, long coeff_bound) {
    auto c = element(a, coeff_bound);
    return c - CohomologyClass::constant(a, c.constant_term() - 1);
  }

  DegreeTuple threefold_degrees(int max_r, long max_degree) {
    DegreeTuple t(uniform(1, max_r));
    for (auto& d : t) d = uniform(2, max_degree);
    std::sort(t.rbegin(), t.rend());
    return t;
  }

 private:
  std::mt19937_64 engine_;
};

// Power-series oracle for a complete intersection of degrees d_j in CP^n:
// coefficients of (1+h)^{n+1} / prod(1 + d_j h) up to h^3, computed with
// plain coefficient recursions rather than the quotient ring.
struct SeriesChern {
  Integer c1, c2, c3;
};

inline SeriesChern series_chern(int n, const std::vector<Integer>& degrees) {
  std::vector<Integer> s(4, 0);
  for (int j = 0; j <= 3; ++j) {
    Integer binom = 1;
    for (int t = 0; t < j; ++t) binom = binom * (n + 1 - t) / (t + 1);
    s[j] = binom;
  }
  for (const auto& d : degrees) {
    // multiply by 1/(1 + d h) = sum (-d)^j h^j
    std::vector<Integer> out(4, 0);
    for (int i = 0; i <= 3; ++i) {
      Integer pw = 1;
      for (int j = 0; i + j <= 3; ++j) {
        out[i + j] += s[i] * pw;
        pw *= -d;
      }
    }
    s = out;
  }
  return {s[1], s[2], s[3]};
}

// Surface of bidegree (p, Q) in CP^1 x CP^2, expanded by hand from adjunction.
inline Integer oracle_c1sq(const Integer& p, const Integer& big_q) {
  return 2 * (2 - p) * (3 - big_q) * big_q + (3 - big_q) * (3 - big_q) * p;
}

inline Integer oracle_c2(const Integer& p, const Integer& big_q) {
  return big_q * (6 - 2 * big_q - 3 * p + 2 * p * big_q) + p * (3 - 3 * big_q + big_q * big_q);
}

// Smallest positive solution by scanning 1..prod(moduli).
inline long brute_crt(const std::vector<std::pair<long, long>>& system) {
  long prod = 1;
  for (const auto& [r, m] : system) prod *= m;
  for (long x = 1; x <= prod; ++x) {
    bool ok = true;
    for (const auto& [r, m] : system) {
      if (((x - r) % m + m) % m != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return -1;
}

// Single-phase oracle: evaluate full Wall invariants of every multidegree
// and group on (d, m, e, parity of k) with at least two distinct k.
inline std::set<std::set<DegreeTuple>> single_phase_groups(const std::vector<DegreeTuple>& all) {
  std::map<std::vector<std::string>, std::map<std::string, std::vector<DegreeTuple>>> buckets;
  for (const auto& t : all) {
    Integer d = 1, sum = 0, sum_sq = 0;
    std::vector<Integer> degs(t.begin(), t.end());
    for (const auto& v : degs) {
      d *= v;
      sum += v;
      sum_sq += v * v;
    }
    const long r = static_cast<long>(t.size());
    const Integer k = 4 + r - sum;
    const Integer m = 4 + r - sum_sq;
    const auto series = series_chern(3 + static_cast<int>(r), degs);
    const Integer e = series.c3 * d;
    const std::vector<std::string> key = {d.get_str(), m.get_str(), e.get_str(),
                                          is_odd(k) ? "1" : "0"};
    buckets[key][k.get_str()].push_back(t);
  }
  std::set<std::set<DegreeTuple>> out;
  for (const auto& [key, by_k] : buckets) {
    if (by_k.size() < 2) continue;
    std::set<DegreeTuple> group;
    for (const auto& [k, members] : by_k) group.insert(members.begin(), members.end());
    out.insert(group);
  }
  return out;
}

inline std::set<std::set<DegreeTuple>> as_sets(const SearchResult& r) {
  std::set<std::set<DegreeTuple>> out;
  for (const auto& g : r.groups) {
    std::set<DegreeTuple> s;
    for (const auto& m : g.members) s.insert(m.degrees);
    out.insert(s);
  }
  return out;
}

}  // namespace sasaki::testing
