// SPDX-License-Identifier: Apache-2.0
#include "xleg/ratfun.hpp"

#include <stdexcept>
#include <utility>

#include "xleg/errors.hpp"

namespace xleg {

RatFun::RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  normalize();
}

RatFun::RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Rat lead = den_.leading();
  if (lead != Rat(1)) {
    num_ /= lead;
    den_ /= lead;
  }
}

Rat RatFun::operator()(const Rat& x) const {
  const Rat d = den_(x);
  if (d.is_zero()) throw PoleError("rational function has a pole at z = " + x.str());
  return num_(x) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) return *this = RatFun(num_ + o.num_);
  // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d' g), then cancel
  // whatever the sum still shares with g.
  const Poly g = gcd(den_, o.den_);
  const Poly b1 = exact_quotient(den_, g);
  const Poly d1 = exact_quotient(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFun();
  Poly d = b1 * d1;
  if (g.degree() > 0) {
    const Poly h = gcd(n, g);
    if (h.degree() > 0) {
      n = exact_quotient(n, h);
      d *= exact_quotient(g, h);
    } else {
      d *= g;
    }
  }
  return *this = RatFun(std::move(n), std::move(d), Reduced{});
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  // Cross-cancel: gcd(a, d) and gcd(c, b) for (a/b)(c/d).
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (g1.degree() > 0) {
    a = exact_quotient(a, g1);
    d = exact_quotient(d, g1);
  }
  if (g2.degree() > 0) {
    c = exact_quotient(c, g2);
    b = exact_quotient(b, g2);
  }
  return *this = RatFun(a * c, b * d, Reduced{});
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return *this *= RatFun(o.den_, o.num_, Reduced{});
}

Rat rf_evaluate(const RatFun& f, const Rat& x) { return f(x); }

RatFun differentiate(const RatFun& f) {
  if (f.is_polynomial()) return RatFun(differentiate(f.num()) / f.den().leading());
  const Poly& n = f.num();
  const Poly& d = f.den();
  return RatFun(differentiate(n) * d - n * differentiate(d), d * d);
}

Poly as_polynomial(const RatFun& f) {
  if (!f.is_polynomial()) {
    throw NotPolynomialError("expected a polynomial, got " + to_string(f));
  }
  return f.num();
}

std::string to_string(const RatFun& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }

}  // namespace xleg
