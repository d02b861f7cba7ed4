#pragma once

// Integer cohomology ring of a product of projective spaces
//   H^*(CP^{n_1} x ... x CP^{n_r}; Z) = Z[x_1, ..., x_r] / (x_1^{n_1+1}, ..., x_r^{n_r+1}).
// Classes are stored sparsely as exponent vector -> coefficient, always in
// canonical form: no zero coefficients, every exponent within range.

#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/integer.hpp"

namespace sasaki {

class AmbientSpace {
 public:
  explicit AmbientSpace(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
    if (dims_.empty()) throw DomainError("ambient space needs at least one factor");
    for (int n : dims_) {
      if (n < 1) throw DomainError("projective factor dimensions must be positive");
    }
  }

  static AmbientSpace projective(int n) { return AmbientSpace({n}); }

  const std::vector<int>& factor_dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  int dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

  bool operator==(const AmbientSpace&) const = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) s += " x ";
      s += "CP^" + std::to_string(dims_[i]);
    }
    return s;
  }

 private:
  std::vector<int> dims_;
};

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

class CohomologyClass {
 public:
  using Terms = std::map<Exponent, Integer>;

  /// The zero class.
  explicit CohomologyClass(AmbientSpace ambient) : ambient_(std::move(ambient)) {}

  static CohomologyClass constant(AmbientSpace ambient, const Integer& value) {
    CohomologyClass c(std::move(ambient));
    c.accumulate(Exponent(c.ambient_.factors(), 0), value);
    return c;
  }

  static CohomologyClass one(AmbientSpace ambient) { return constant(std::move(ambient), 1); }

  /// coeff * x_1^{e_1} ... x_r^{e_r}; zero if some e_i exceeds n_i.
  static CohomologyClass monomial(AmbientSpace ambient, const Exponent& e,
                                  const Integer& coeff = 1) {
    CohomologyClass c(std::move(ambient));
    if (e.size() != c.ambient_.factors()) throw DomainError("exponent vector has wrong length");
    for (int v : e) {
      if (v < 0) throw DomainError("negative exponent");
    }
    if (c.in_range(e)) c.accumulate(e, coeff);
    return c;
  }

  /// The hyperplane generator x_i (zero-based factor index).
  static CohomologyClass generator(AmbientSpace ambient, std::size_t factor) {
    if (factor >= ambient.factors()) throw DomainError("generator index out of range");
    Exponent e(ambient.factors(), 0);
    e[factor] = 1;
    return monomial(std::move(ambient), e);
  }

  /// sum_i coeffs[i] * x_i
  static CohomologyClass linear(AmbientSpace ambient, std::span<const Integer> coeffs) {
    if (coeffs.size() != ambient.factors()) throw DomainError("linear form has wrong length");
    CohomologyClass c(std::move(ambient));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponent e(c.ambient_.factors(), 0);
      e[i] = 1;
      c.accumulate(e, coeffs[i]);
    }
    return c;
  }

  const AmbientSpace& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer constant_term() const { return coefficient(Exponent(ambient_.factors(), 0)); }

  /// Coefficients of x_1, ..., x_r.
  std::vector<Integer> linear_coefficients() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < ambient_.factors(); ++i) {
      Exponent e(ambient_.factors(), 0);
      e[i] = 1;
      out.push_back(coefficient(e));
    }
    return out;
  }

  CohomologyClass homogeneous_part(int degree) const {
    CohomologyClass out(ambient_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) == degree) out.terms_.emplace(e, c);
    }
    return out;
  }

  CohomologyClass& operator+=(const CohomologyClass& other) {
    require_same_ambient(other);
    for (const auto& [e, c] : other.terms_) accumulate(e, c);
    return *this;
  }

  CohomologyClass& operator-=(const CohomologyClass& other) {
    require_same_ambient(other);
    for (const auto& [e, c] : other.terms_) accumulate(e, -c);
    return *this;
  }

  CohomologyClass operator-() const {
    CohomologyClass out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }

  /// Cup product; monomials leaving the truncation box are dropped.
  friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
    a.require_same_ambient(b);
    CohomologyClass out(a.ambient_);
    Exponent e(a.ambient_.factors());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > a.ambient_.factor_dims()[i]) {
            ok = false;
            break;
          }
        }
        if (ok) out.accumulate(e, ca * cb);
      }
    }
    return out;
  }

  friend CohomologyClass operator*(const Integer& s, const CohomologyClass& a) {
    CohomologyClass out(a.ambient_);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
    return out;
  }

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

  /// Debug dump, monomials in lexicographic exponent order: "1 + 3*x1 + 3*x1^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        os << mag;
      } else if (mag == 1) {
        os << mono;
      } else {
        os << mag << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  bool in_range(const Exponent& e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > ambient_.factor_dims()[i]) return false;
    }
    return true;
  }

  void accumulate(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_same_ambient(const CohomologyClass& other) const {
    if (!(ambient_ == other.ambient_)) {
      throw DomainError("ambient mismatch: " + ambient_.to_string() + " vs " +
                        other.ambient_.to_string());
    }
  }

  AmbientSpace ambient_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const CohomologyClass& c) {
  return os << c.to_string();
}

inline CohomologyClass power(const CohomologyClass& a, unsigned exponent) {
  CohomologyClass result = CohomologyClass::one(a.ambient());
  CohomologyClass base = a;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

/// Inverse of a class with constant term 1, as the terminating series sum_j (1 - a)^j.
inline CohomologyClass unit_inverse(const CohomologyClass& a) {
  if (a.constant_term() != 1) throw DomainError("unit_inverse needs constant term 1");
  const CohomologyClass one = CohomologyClass::one(a.ambient());
  const CohomologyClass nilpotent = one - a;
  CohomologyClass sum = one;
  CohomologyClass term = one;
  for (int j = 1; j <= a.ambient().dimension(); ++j) {
    term = term * nilpotent;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

/// Pairing with the fundamental class: the coefficient of x_1^{n_1} ... x_r^{n_r}.
inline Integer integrate(const CohomologyClass& a) {
  return a.coefficient(a.ambient().factor_dims());
}

}  // namespace sasaki
