// SPDX-License-Identifier: Apache-2.0
#include "xleg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "xleg/errors.hpp"

namespace xleg {

namespace {

using IntPoly = std::vector<mpz_class>;

// p = ints / den, den > 0 the lcm of coefficient denominators.
struct Scaled {
  IntPoly ints;
  mpz_class den;
};

Scaled to_scaled(const Poly& p) {
  Scaled s{{}, 1};
  for (const Rat& c : p.coeffs()) {
    mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.value().get_den_mpz_t());
  }
  s.ints.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), s.den.get_mpz_t(), c.value().get_den_mpz_t());
    v *= c.value().get_num();
    s.ints.push_back(std::move(v));
  }
  return s;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class int_content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  const mpz_class g = int_content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Some nonzero integer multiple of the remainder of a by b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const mpz_class fa = lb / g;  // a * fa - z^shift * b * fb kills the lead term
    const mpz_class fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= fb * b[k];
    trim(a);
    make_primitive(a);
  }
  return a;
}

Poly from_ints(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(mpq_class(v));
  return Poly(std::move(c));
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::z() { return monomial(1, 1); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.value();
    acc += it->value();
  }
  return Rat(std::move(acc));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Convolve over Z with a common denominator; canonicalize once per output.
  const Scaled sa = to_scaled(a);
  const Scaled sb = to_scaled(b);
  IntPoly prod(sa.ints.size() + sb.ints.size() - 1);
  for (std::size_t i = 0; i < sa.ints.size(); ++i) {
    if (sa.ints[i] == 0) continue;
    for (std::size_t j = 0; j < sb.ints.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), sa.ints[i].get_mpz_t(), sb.ints[j].get_mpz_t());
    }
  }
  const mpz_class den = sa.den * sb.den;
  std::vector<Rat> c;
  c.reserve(prod.size());
  for (auto& v : prod) c.emplace_back(v, den);
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Rat& s) {
  if (s.is_zero()) throw std::domain_error("polynomial divided by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

Rat evaluate(const Poly& p, const Rat& x) { return p(x); }

Poly differentiate(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rat> d(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
    d[k - 1] = p.coeffs()[k] * Rat(static_cast<long>(k));
  }
  return Poly(std::move(d));
}

Poly antiderivative_from_minus1(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rat> f(p.coeffs().size() + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    f[k + 1] = p.coeffs()[k] / Rat(static_cast<long>(k + 1));
  }
  Poly F(std::move(f));
  return F - Poly::constant(F(Rat(-1)));
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rat> quot(rem.size() - db);
  const Rat inv_lead = b.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rat q = rem[k + db] * inv_lead;
    if (q.is_zero()) continue;
    quot[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw NotPolynomialError("division leaves nonzero remainder " + to_string(r));
  }
  return q;
}

Rat content(const Poly& p) {
  if (p.is_zero()) return Rat();
  const Scaled s = to_scaled(p);
  return Rat(int_content(s.ints), s.den);
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return {};
  Scaled s = to_scaled(p);
  make_primitive(s.ints);
  return from_ints(s.ints);
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return {};
  return p / p.leading();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  IntPoly x = to_scaled(a).ints;
  IntPoly y = to_scaled(b).ints;
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly::constant(1);
    IntPoly r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(from_ints(x));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rat& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rat mag = c.sign() < 0 ? -c : c;
    const std::string ms = mag.is_integer() ? mag.num().get_str() : mag.str();
    if (k == 0) os << ms;
    else {
      if (mag != Rat(1)) os << ms << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace xleg
