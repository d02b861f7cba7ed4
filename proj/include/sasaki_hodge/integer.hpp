#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sasaki_hodge/errors.hpp"

namespace sasaki {

/// Arbitrary-precision signed integer used for every coefficient and invariant.
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// Parses a base-10 integer with an optional leading sign.
inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// a / b, throwing IntegrityError unless b divides a.
inline Integer exact_div(const Integer& a, const Integer& b, std::string_view context) {
  if (b == 0) throw IntegrityError(std::string(context) + ": division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw IntegrityError(std::string(context) + ": " + to_string(b) + " does not divide " +
                         to_string(a));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& b, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

inline Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline std::vector<std::string> to_strings(std::span<const Integer> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace sasaki
