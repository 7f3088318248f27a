// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "xleg/rat.hpp"

namespace xleg {

/// Dense univariate polynomial in z over the rationals.
///
/// Coefficient k multiplies z^k. Trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient vector and degree kZeroDegree.
/// kZeroDegree compares below every real degree; callers that need
/// deg(a*b) = deg a + deg b must check is_zero() first.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t k);
  /// The polynomial z.
  static Poly z();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const;
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  Poly& operator/=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rat& s) { return a /= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

Rat evaluate(const Poly& p, const Rat& x);
Poly differentiate(const Poly& p);
/// F with F' = p and F(-1) = 0.
Poly antiderivative_from_minus1(const Poly& p);
Poly pow(const Poly& p, unsigned e);

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q; throws std::domain_error for b == 0.
PolyDivMod divmod(const Poly& a, const Poly& b);
/// a / b when b divides a; throws NotPolynomialError otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Positive rational c such that p / c has coprime integer coefficients.
/// content(0) = 0.
Rat content(const Poly& p);
/// p / content(p). Sign of the leading coefficient is preserved.
Poly primitive_part(const Poly& p);
Poly monic(const Poly& p);
/// Monic gcd (primitive PRS over Z); gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Human-readable form for diagnostics, highest power first.
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace xleg
