// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>

#include "xleg/poly.hpp"

namespace xleg {

/// Reduced ratio num/den of polynomials.
///
/// Canonical form: gcd(num, den) = 1, den monic, zero is 0/1. Two RatFun
/// values are equal as functions exactly when their fields are equal.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(Poly p);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is the zero polynomial.
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws PoleError when x is a zero of the reduced denominator.
  Rat operator()(const Rat& x) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  /// Throws std::domain_error when o is zero.
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

 private:
  struct Reduced {};
  RatFun(Poly num, Poly den, Reduced);
  void normalize();
  Poly num_;
  Poly den_;
};

Rat rf_evaluate(const RatFun& f, const Rat& x);
RatFun differentiate(const RatFun& f);
/// The quotient num/den when it is a polynomial; NotPolynomialError otherwise.
Poly as_polynomial(const RatFun& f);

std::string to_string(const RatFun& f);
std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace xleg
