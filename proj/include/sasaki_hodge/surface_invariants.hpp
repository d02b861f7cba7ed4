#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/integer.hpp"

namespace sasaki {

/// Invariants of a simply connected algebraic surface.
///
/// c1_coeffs expresses c1 in some integral basis chosen by the family that
/// produced the record (ambient generators for hypersurfaces, the primitive
/// canonical direction for Horikawa surfaces). c1_div is the gcd of those
/// coefficients, with 0 standing for c1 = 0.
struct SurfaceInvariants {
  std::vector<Integer> c1_coeffs;
  Integer c1sq;
  Integer c2;
  Integer chi_o;
  Integer b2;
  Integer h02;
  Integer h11;
  bool spin = false;
  Integer c1_div;
  bool ample_canonical = false;

  bool operator==(const SurfaceInvariants&) const = default;

  /// Fills the derived fields from (c1, c1^2, c2) using Noether's formula and
  /// b1 = 0. Spin defaults to "every c1 coefficient even".
  static SurfaceInvariants from_chern_data(std::vector<Integer> c1, Integer c1sq, Integer c2,
                                           bool ample_canonical,
                                           std::optional<bool> spin = std::nullopt) {
    SurfaceInvariants s;
    s.c1_coeffs = std::move(c1);
    s.c1sq = std::move(c1sq);
    s.c2 = std::move(c2);
    s.chi_o = exact_div(s.c1sq + s.c2, 12, "Noether formula");
    s.b2 = s.c2 - 2;
    s.h02 = s.chi_o - 1;
    s.h11 = s.b2 - 2 * s.h02;
    s.c1_div = gcd_of(s.c1_coeffs);
    if (spin) {
      s.spin = *spin;
    } else {
      s.spin = true;
      for (const auto& a : s.c1_coeffs) {
        if (is_odd(a)) s.spin = false;
      }
    }
    s.ample_canonical = ample_canonical;
    return s;
  }

  /// Hodge entries nonnegative.
  bool hodge_valid() const { return b2 >= 0 && h02 >= 0 && h11 >= 0; }
};

}  // namespace sasaki
