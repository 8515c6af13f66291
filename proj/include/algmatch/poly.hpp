#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algmatch/gf.hpp"

namespace algmatch {

/// Dense univariate polynomial over F_p, coefficients stored low-to-high and
/// kept normalized (no trailing zeros; the zero polynomial is empty).
class Polynomial {
 public:
  explicit Polynomial(const PrimeModulus& modulus) : modulus_(modulus) {}

  /// Raw coefficients (reduced mod p), low-to-high.
  Polynomial(std::vector<u64> coeffs, const PrimeModulus& modulus);

  static Polynomial constant(u64 c, const PrimeModulus& modulus) { return Polynomial({c}, modulus); }

  /// y^k.
  static Polynomial monomial(std::size_t k, const PrimeModulus& modulus);

  const PrimeModulus& modulus() const { return modulus_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// [y^k]f, zero beyond the degree.
  u64 coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  FieldElement coefficient(std::size_t k) const { return FieldElement(coeff(k), modulus_); }

  std::span<const u64> coeffs() const { return coeffs_; }

  FieldElement eval(const FieldElement& a) const;
  u64 eval_raw(u64 a) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(u64 c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

  /// "<degree> c0 c1 ... cd"; the zero polynomial prints as "-1".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

 private:
  void check_same_field(const Polynomial& o) const;
  void normalize();

  std::vector<u64> coeffs_;
  PrimeModulus modulus_;
};

/// Lagrange interpolation through pairwise-distinct abscissae; the result has
/// degree < points.size(). Throws UsageError on an empty list or a repeated
/// abscissa.
Polynomial interpolate(std::span<const std::pair<FieldElement, FieldElement>> points);

/// g(y) = f(y + c).
Polynomial taylor_shift(const Polynomial& f, const FieldElement& c);

/// g_i = f_{n-i} for 0 <= i <= n, i.e. y^n f(1/y). Throws UsageError if
/// deg f > n.
Polynomial reverse(const Polynomial& f, std::size_t n);

/// Some g with g^2 = d, or nullopt when d is not a square in F_p[y]. Either
/// sign of the root may be returned.
std::optional<Polynomial> poly_sqrt(const Polynomial& d);

}  // namespace algmatch
