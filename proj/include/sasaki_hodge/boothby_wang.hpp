#pragma once

// Topology of Boothby-Wang circle bundles over projective bases, read off from
// the invariants of the base. For a regular Sasaki structure the basic Hodge
// numbers are the Hodge numbers of the base, so all reporting here is in terms
// of base data.

#include <cstddef>
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

struct BaseSurfaceData {
  SurfaceInvariants inv;
  /// Euler class of the circle bundle, in the basis of inv.c1_coeffs.
  std::vector<Integer> euler_class;
  bool simply_connected = true;
};

/// Simply connected 5-manifold with torsion-free homology:
/// SpinSum(n) = #n (S^2 x S^3) (n = 0 is S^5), NonSpinSum(n) = SpinSum(n) # (S^2 x~ S^3).
struct ManifoldType {
  enum class Kind { SpinSum, NonSpinSum };
  Kind kind = Kind::SpinSum;
  Integer n;

  bool operator==(const ManifoldType&) const = default;

  std::string to_string() const {
    return std::string(kind == Kind::SpinSum ? "SpinSum" : "NonSpinSum") + "(" +
           sasaki::to_string(n) + ")";
  }
};

struct BasicHodge {
  Integer h02;
  Integer h11;
  Integer b2;
  bool operator==(const BasicHodge&) const = default;
};

struct BoothbyWangReport {
  ManifoldType manifold;
  bool contact_c1_zero = false;
  /// Divisibility of c1 of the base (0 when c1 = 0).
  Integer hamilton_div;
  BasicHodge basic_hodge;
  bool negative_type = false;
  std::string note;

  bool operator==(const BoothbyWangReport&) const = default;
};

/// Some integer lambda with c = lambda * e, if one exists. e must be nonzero.
inline std::optional<Integer> integer_multiple(std::span<const Integer> c,
                                               std::span<const Integer> e) {
  std::size_t pivot = e.size();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == e.size()) return std::nullopt;
  if (!divides(e[pivot], c[pivot])) return std::nullopt;
  Integer lambda = c[pivot] / e[pivot];
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (c[i] != lambda * e[i]) return std::nullopt;
  }
  return lambda;
}

/// Primitive class in the direction of -c1 (the canonical class).
inline std::vector<Integer> canonical_euler_class(const SurfaceInvariants& inv) {
  if (inv.c1_div == 0) throw DomainError("c1 = 0 has no canonical direction");
  std::vector<Integer> e;
  for (const auto& a : inv.c1_coeffs) e.push_back(-a / inv.c1_div);
  return e;
}

inline BoothbyWangReport bw_classify(const BaseSurfaceData& base) {
  if (!base.simply_connected) throw DomainError("base surface must be simply connected");
  const auto& inv = base.inv;
  if (base.euler_class.size() != inv.c1_coeffs.size()) {
    throw DomainError("Euler class and c1 are given in bases of different rank");
  }
  if (gcd_of(base.euler_class) != 1) throw DomainError("Euler class is not primitive");

  // w2 of the total space is the pullback of c1 mod 2, whose kernel is spanned by the Euler class.
  bool spin = inv.spin;
  if (!spin) {
    spin = true;
    for (std::size_t i = 0; i < inv.c1_coeffs.size(); ++i) {
      if (is_odd(inv.c1_coeffs[i] - base.euler_class[i])) spin = false;
    }
  }
  if (inv.b2 < 1) throw IntegrityError("projective surface with b2 < 1");

  BoothbyWangReport r;
  r.manifold.kind = spin ? ManifoldType::Kind::SpinSum : ManifoldType::Kind::NonSpinSum;
  r.manifold.n = inv.b2 - 1;
  const auto lambda = integer_multiple(inv.c1_coeffs, base.euler_class);
  r.contact_c1_zero = lambda.has_value();
  r.hamilton_div = inv.c1_div;
  r.basic_hodge = BasicHodge{inv.h02, inv.h11, inv.b2};
  r.negative_type = inv.ample_canonical;
  if (!r.contact_c1_zero) {
    r.note = "Euler class is not proportional to c1; contact c1 need not vanish";
  } else if (inv.ample_canonical && *lambda >= 0) {
    r.note = "Euler class is not a positive multiple of the canonical class";
  }
  return r;
}

enum class ContactVerdict { Inequivalent, Inconclusive };

inline const char* to_string(ContactVerdict v) {
  return v == ContactVerdict::Inequivalent ? "Inequivalent" : "Inconclusive";
}

/// Hamilton's divisibility obstruction: equivalent contact structures with
/// vanishing c1 force equal d(c1) of the bases. Only one direction is decidable.
inline ContactVerdict hamilton_obstruction(const BoothbyWangReport& r1,
                                           const BoothbyWangReport& r2) {
  if (!(r1.manifold == r2.manifold)) {
    throw DomainError("Hamilton obstruction needs the same total space: " +
                      r1.manifold.to_string() + " vs " + r2.manifold.to_string());
  }
  if (!r1.contact_c1_zero || !r2.contact_c1_zero) {
    throw DomainError("Hamilton obstruction needs contact structures with c1 = 0");
  }
  return r1.hamilton_div != r2.hamilton_div ? ContactVerdict::Inequivalent
                                            : ContactVerdict::Inconclusive;
}

enum class LinkSign { Positive, Null, NegativeSign };

inline const char* to_string(LinkSign s) {
  switch (s) {
    case LinkSign::Positive: return "Positive";
    case LinkSign::Null: return "Null";
    case LinkSign::NegativeSign: return "NegativeSign";
  }
  return "?";
}

/// Sign of sum w_i - d for a weighted homogeneous link. Only Positive is
/// meaningful as a sufficient condition for a positive Sasaki structure.
inline LinkSign link_sign(std::span<const Integer> weights, const Integer& degree) {
  Integer s = -degree;
  for (const auto& w : weights) s += w;
  if (s > 0) return LinkSign::Positive;
  if (s == 0) return LinkSign::Null;
  return LinkSign::NegativeSign;
}

class HodgeDiamond {
 public:
  explicit HodgeDiamond(int dim) : dim_(dim), h_((dim + 1) * (dim + 1)) {
    if (dim < 0) throw DomainError("negative dimension");
  }

  static HodgeDiamond point() {
    HodgeDiamond d(0);
    d.at(0, 0) = 1;
    return d;
  }

  static HodgeDiamond curve(const Integer& genus) {
    HodgeDiamond d(1);
    d.at(0, 0) = d.at(1, 1) = 1;
    d.at(1, 0) = d.at(0, 1) = genus;
    return d;
  }

  /// Simply connected surface.
  static HodgeDiamond surface(const SurfaceInvariants& inv) {
    HodgeDiamond d(2);
    d.at(0, 0) = d.at(2, 2) = 1;
    d.at(2, 0) = d.at(0, 2) = inv.h02;
    d.at(1, 1) = inv.h11;
    return d;
  }

  int dim() const { return dim_; }
  Integer& at(int p, int q) { return h_.at(index(p, q)); }
  const Integer& at(int p, int q) const { return h_.at(index(p, q)); }

  Integer euler_characteristic() const {
    Integer chi = 0;
    for (int p = 0; p <= dim_; ++p) {
      for (int q = 0; q <= dim_; ++q) chi += ((p + q) % 2 ? -1 : 1) * at(p, q);
    }
    return chi;
  }

  /// h^{p,q} = h^{q,p} = h^{n-p,n-q}
  bool symmetric() const {
    for (int p = 0; p <= dim_; ++p) {
      for (int q = 0; q <= dim_; ++q) {
        if (at(p, q) != at(q, p) || at(p, q) != at(dim_ - p, dim_ - q)) return false;
      }
    }
    return true;
  }

  bool operator==(const HodgeDiamond&) const = default;

 private:
  std::size_t index(int p, int q) const {
    if (p < 0 || q < 0 || p > dim_ || q > dim_) throw DomainError("Hodge index out of range");
    return static_cast<std::size_t>(p * (dim_ + 1) + q);
  }

  int dim_;
  std::vector<Integer> h_;
};

/// Hodge diamond of a complete-intersection threefold: Lefschetz fixes every
/// entry off the middle row to that of CP^3.
inline HodgeDiamond ci3_diamond(const WallInvariants& w, const Integer& d) {
  const auto h = ci3_hodge(w, d);
  HodgeDiamond out(3);
  for (int p = 0; p <= 3; ++p) out.at(p, p) = 1;
  out.at(3, 0) = out.at(0, 3) = h.h03;
  out.at(2, 1) = out.at(1, 2) = h.h12;
  return out;
}

inline HodgeDiamond kunneth_hodge(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond out(a.dim() + b.dim());
  for (int s = 0; s <= a.dim(); ++s) {
    for (int t = 0; t <= a.dim(); ++t) {
      if (a.at(s, t) == 0) continue;
      for (int u = 0; u <= b.dim(); ++u) {
        for (int v = 0; v <= b.dim(); ++v) out.at(s + u, t + v) += a.at(s, t) * b.at(u, v);
      }
    }
  }
  return out;
}

struct SevenDimReport {
  Integer fundamental_group_order;
  bool simply_connected = false;
  int dimension = 7;
  HodgeDiamond first{3};
  HodgeDiamond second{3};
};

inline void require_wall_pair_with_distinct_c1(const WallInvariants& a, const WallInvariants& b) {
  if (!are_diffeomorphic_wall(a, b)) throw DomainError("pair is not Wall-diffeomorphic");
  if (a.k == b.k) throw DomainError("pair has equal first Chern classes");
}

/// Circle bundles with Euler class k x over a Wall-diffeomorphic pair of
/// threefolds; pi_1 of the total space is Z/k.
inline SevenDimReport seven_dim_pair(const Integer& k, const WallInvariants& a,
                                     const WallInvariants& b) {
  if (k < 1) throw DomainError("Euler class multiple must be >= 1");
  require_wall_pair_with_distinct_c1(a, b);
  SevenDimReport r;
  r.fundamental_group_order = k;
  r.simply_connected = (k == 1);
  r.first = ci3_diamond(a, a.d);
  r.second = ci3_diamond(b, b.d);
  if (r.first == r.second) throw IntegrityError("distinct c1 but equal Hodge diamonds");
  return r;
}

struct HigherDimReport {
  int dimension = 0;
  HodgeDiamond first{0};
  HodgeDiamond second{0};
};

/// Products X_i x P with P of ample canonical bundle; Euler class x + K_P.
inline HigherDimReport higher_dim_pair(const WallInvariants& a, const WallInvariants& b,
                                       const HodgeDiamond& p_diamond, bool p_ample_canonical) {
  if (!p_ample_canonical) throw DomainError("factor P must have ample canonical bundle");
  require_wall_pair_with_distinct_c1(a, b);
  HigherDimReport r;
  r.dimension = 2 * (3 + p_diamond.dim()) + 1;
  r.first = kunneth_hodge(ci3_diamond(a, a.d), p_diamond);
  r.second = kunneth_hodge(ci3_diamond(b, b.d), p_diamond);
  if (r.first == r.second) throw IntegrityError("Kunneth products of distinct diamonds agree");
  return r;
}

}  // namespace sasaki
