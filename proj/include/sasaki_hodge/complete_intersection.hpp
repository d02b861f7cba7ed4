#pragma once

// Chern classes, Chern numbers, Wall invariants and Hodge numbers of complete
// intersections in products of projective spaces. Everything is computed by
// adjunction inside the ambient cohomology ring:
//   c(X) = prod_i (1 + x_i)^{n_i + 1} / prod_j (1 + sum_i d_{j,i} x_i)
// and integrals over X are ambient integrals against prod_j (sum_i d_{j,i} x_i).

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sasaki_hodge/cohomology_ring.hpp"
#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/integer.hpp"

namespace sasaki {

/// Degrees of one hypersurface, one entry per ambient factor.
struct MultiDegree {
  std::vector<Integer> degrees;

  friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) {
    return std::lexicographical_compare_three_way(
        a.degrees.begin(), a.degrees.end(), b.degrees.begin(), b.degrees.end(),
        [](const Integer& x, const Integer& y) {
          int c = cmp(x, y);
          return c < 0 ? std::strong_ordering::less
                       : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        });
  }
  friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
    return a.degrees == b.degrees;
  }
};

class CompleteIntersectionSpec {
 public:
  CompleteIntersectionSpec(AmbientSpace ambient, std::vector<MultiDegree> hypersurfaces)
      : ambient_(std::move(ambient)), hypersurfaces_(std::move(hypersurfaces)) {
    for (const auto& h : hypersurfaces_) {
      if (h.degrees.size() != ambient_.factors()) {
        throw DomainError("multidegree length does not match the number of ambient factors");
      }
      bool nonzero = false;
      for (const auto& d : h.degrees) {
        if (d < 0) throw DomainError("negative degree in multidegree");
        if (d != 0) nonzero = true;
      }
      if (!nonzero) throw DomainError("multidegree with all entries zero");
    }
    if (dimension() < 1) throw DomainError("complete intersection has dimension < 1");
    // Canonical order: descending.
    std::sort(hypersurfaces_.begin(), hypersurfaces_.end(),
              [](const MultiDegree& a, const MultiDegree& b) { return b < a; });
  }

  /// Complete intersection of the given degrees in CP^n.
  static CompleteIntersectionSpec in_projective_space(int n, std::span<const Integer> degrees) {
    std::vector<MultiDegree> hs;
    for (const auto& d : degrees) hs.push_back(MultiDegree{{d}});
    return CompleteIntersectionSpec(AmbientSpace::projective(n), std::move(hs));
  }

  static CompleteIntersectionSpec in_projective_space(int n, std::span<const long> degrees) {
    std::vector<Integer> ds(degrees.begin(), degrees.end());
    return in_projective_space(n, std::span<const Integer>(ds));
  }

  const AmbientSpace& ambient() const { return ambient_; }
  const std::vector<MultiDegree>& hypersurfaces() const { return hypersurfaces_; }
  int dimension() const {
    return ambient_.dimension() - static_cast<int>(hypersurfaces_.size());
  }
  bool single_factor() const { return ambient_.factors() == 1; }

  /// Degrees of a single-factor complete intersection, descending.
  std::vector<Integer> degrees() const {
    if (!single_factor()) throw DomainError("degrees() needs a single projective factor");
    std::vector<Integer> out;
    for (const auto& h : hypersurfaces_) out.push_back(h.degrees[0]);
    return out;
  }

 private:
  AmbientSpace ambient_;
  std::vector<MultiDegree> hypersurfaces_;
};

/// Class of sum_i d_i x_i for one hypersurface.
inline CohomologyClass hypersurface_class(const AmbientSpace& ambient, const MultiDegree& h) {
  return CohomologyClass::linear(ambient, h.degrees);
}

/// Total Chern class of the complete intersection, represented in the ambient ring.
inline CohomologyClass tangent_chern_class(const CompleteIntersectionSpec& spec) {
  const auto& ambient = spec.ambient();
  const auto one = CohomologyClass::one(ambient);
  CohomologyClass total = one;
  for (std::size_t i = 0; i < ambient.factors(); ++i) {
    auto xi = CohomologyClass::generator(ambient, i);
    total = total * power(one + xi, static_cast<unsigned>(ambient.factor_dims()[i] + 1));
  }
  CohomologyClass normal = one;
  for (const auto& h : spec.hypersurfaces()) normal = normal * (one + hypersurface_class(ambient, h));
  return total * unit_inverse(normal);
}

/// Poincare dual of the complete intersection in the ambient.
inline CohomologyClass fundamental_cycle(const CompleteIntersectionSpec& spec) {
  CohomologyClass cycle = CohomologyClass::one(spec.ambient());
  for (const auto& h : spec.hypersurfaces()) cycle = cycle * hypersurface_class(spec.ambient(), h);
  return cycle;
}

inline Integer integrate_over_ci(const CompleteIntersectionSpec& spec, const CohomologyClass& a) {
  return integrate(a * fundamental_cycle(spec));
}

/// Sum of the hyperplane generators; the positive generator x when there is one factor.
inline CohomologyClass hyperplane_class(const AmbientSpace& ambient) {
  CohomologyClass h(ambient);
  for (std::size_t i = 0; i < ambient.factors(); ++i) h += CohomologyClass::generator(ambient, i);
  return h;
}

struct SurfaceChernNumbers {
  Integer c1sq;
  Integer c2;
  bool operator==(const SurfaceChernNumbers&) const = default;
};

struct ThreefoldChernNumbers {
  Integer c1cube;
  Integer c1c2;
  Integer c3;          // Euler number
  Integer p1_pairing;  // <p1 . h, [X]> with h = hyperplane_class
  bool operator==(const ThreefoldChernNumbers&) const = default;
};

struct ChernReport {
  int dim = 0;
  CohomologyClass c1;
  std::variant<SurfaceChernNumbers, ThreefoldChernNumbers> numbers;

  const SurfaceChernNumbers& surface() const { return std::get<SurfaceChernNumbers>(numbers); }
  const ThreefoldChernNumbers& threefold() const {
    return std::get<ThreefoldChernNumbers>(numbers);
  }
};

/// Chern numbers for complete intersections of dimension 2 or 3.
/// Checks Noether (12 | c1^2 + c2) and Todd (24 | c1 c2) integrality.
inline ChernReport chern_numbers(const CompleteIntersectionSpec& spec) {
  const int dim = spec.dimension();
  if (dim != 2 && dim != 3) {
    throw DomainError("chern_numbers supports dimension 2 or 3, got " + std::to_string(dim));
  }
  const auto c = tangent_chern_class(spec);
  const auto c1 = c.homogeneous_part(1);
  const auto c2 = c.homogeneous_part(2);
  if (dim == 2) {
    SurfaceChernNumbers s{integrate_over_ci(spec, c1 * c1), integrate_over_ci(spec, c2)};
    if (!divides(12, s.c1sq + s.c2)) {
      throw IntegrityError("Noether divisibility fails: c1^2 + c2 = " + to_string(s.c1sq + s.c2));
    }
    return ChernReport{dim, c1, s};
  }
  const auto c3 = c.homogeneous_part(3);
  const auto p1 = c1 * c1 - Integer(2) * c2;
  ThreefoldChernNumbers t{integrate_over_ci(spec, c1 * c1 * c1), integrate_over_ci(spec, c1 * c2),
                          integrate_over_ci(spec, c3),
                          integrate_over_ci(spec, p1 * hyperplane_class(spec.ambient()))};
  if (!divides(24, t.c1c2)) {
    throw IntegrityError("Todd divisibility fails: c1c2 = " + to_string(t.c1c2));
  }
  return ChernReport{dim, c1, t};
}

/// Diffeomorphism data of a complete-intersection threefold in CP^{3+r}:
/// c1 = k x, p1 = m x^2, total degree d, Euler number e.
struct WallInvariants {
  Integer d;
  Integer k;
  Integer m;
  Integer e;
  int k_parity = 0;

  bool operator==(const WallInvariants&) const = default;
};

inline Integer wall_degree(std::span<const Integer> degrees) {
  Integer d = 1;
  for (const auto& v : degrees) d *= v;
  return d;
}

/// k = 4 + r - sum d_j
inline Integer wall_k(std::span<const Integer> degrees) {
  Integer k = 4 + static_cast<long>(degrees.size());
  for (const auto& v : degrees) k -= v;
  return k;
}

/// m = 4 + r - sum d_j^2
inline Integer wall_m(std::span<const Integer> degrees) {
  Integer m = 4 + static_cast<long>(degrees.size());
  for (const auto& v : degrees) m -= v * v;
  return m;
}

/// f(k) = k (k^2 - m) = 2 c1 c2 / x^3
inline Integer wall_f(const Integer& k, const Integer& m) { return k * (k * k - m); }

inline WallInvariants wall_invariants(const CompleteIntersectionSpec& spec) {
  if (!spec.single_factor()) throw DomainError("Wall invariants need a single projective factor");
  if (spec.dimension() != 3) throw DomainError("Wall invariants need a threefold");
  const auto degrees = spec.degrees();
  for (const auto& v : degrees) {
    if (v < 2) throw DomainError("Wall invariants need all degrees >= 2");
  }
  WallInvariants w;
  w.d = wall_degree(degrees);
  w.k = wall_k(degrees);
  w.m = wall_m(degrees);
  w.k_parity = is_odd(w.k) ? 1 : 0;

  const auto report = chern_numbers(spec);
  const auto& t = report.threefold();
  w.e = t.c3;
  if (report.c1.linear_coefficients()[0] != w.k) {
    throw IntegrityError("ring c1 coefficient disagrees with 4 + r - sum d");
  }
  if (t.p1_pairing != w.m * w.d) throw IntegrityError("ring p1 pairing disagrees with m * d");
  if (2 * t.c1c2 != wall_f(w.k, w.m) * w.d) {
    throw IntegrityError("ring c1c2 disagrees with k(k^2 - m) d / 2");
  }
  return w;
}

/// Hodge numbers of a complete-intersection threefold from its Wall invariants.
struct ThreefoldHodge {
  Integer h03;
  Integer h12;
  Integer b3;
  Integer chi_o;

  bool operator==(const ThreefoldHodge&) const = default;
};

inline ThreefoldHodge ci3_hodge(const WallInvariants& w, const Integer& d) {
  ThreefoldHodge h;
  // chi(O) = c1 c2 / 24 with 2 c1 c2 = k (k^2 - m) d
  h.chi_o = exact_div(wall_f(w.k, w.m) * d, 48, "holomorphic Euler characteristic");
  h.h03 = 1 - h.chi_o;
  h.b3 = 4 - w.e;
  if (h.b3 < 0 || is_odd(h.b3)) {
    throw IntegrityError("b3 = 4 - e must be even and nonnegative, got " + to_string(h.b3));
  }
  h.h12 = h.b3 / 2 - h.h03;
  if (h.h03 < 0 || h.h12 < 0) {
    throw IntegrityError("negative Hodge number: h03 = " + to_string(h.h03) +
                         ", h12 = " + to_string(h.h12));
  }
  return h;
}

/// Wall-Jupp test: equal (d, m, e, parity of k).
inline bool are_diffeomorphic_wall(const WallInvariants& a, const WallInvariants& b) {
  return a.d == b.d && a.m == b.m && a.e == b.e && a.k_parity == b.k_parity;
}

/// For Wall-diffeomorphic threefolds with m < 0, Hodge numbers agree iff k agrees.
inline bool hodge_equal(const WallInvariants& a, const WallInvariants& b) {
  if (!are_diffeomorphic_wall(a, b)) {
    throw DomainError("hodge_equal needs a Wall-diffeomorphic pair");
  }
  if (a.m >= 0) throw DomainError("hodge_equal needs m < 0 (quadric excluded)");
  return a.k == b.k;
}

}  // namespace sasaki
