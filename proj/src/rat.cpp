// SPDX-License-Identifier: Apache-2.0
#include "xleg/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace xleg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rat(num, den);
}

std::string Rat::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::string to_decimal(const Rat& r, int digits) {
  if (digits < 1) digits = 1;
  if (r.is_zero()) {
    return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "e+00";
  }
  mpz_class num = abs(r.num());
  const mpz_class den = r.den();

  // Find e with 10^e <= |r| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto pow10 = [](long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
  };
  auto at_least = [&](long k) {  // |r| >= 10^k
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // scaled = |r| * 10^(digits-1-e), rounded half-even.
  const long shift = digits - 1 - e;
  mpz_class n = num, d = den;
  if (shift >= 0) n *= pow10(shift); else d *= pow10(-shift);
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const int c = cmp(2 * rem, d);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  std::string s = q.get_str();
  if (static_cast<long>(s.size()) > digits) {  // rounded up to the next power of ten
    s.pop_back();
    ++e;
  }
  std::string out = r.sign() < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (digits > 1) out += "." + s.substr(1);
  out += e < 0 ? "e-" : "e+";
  const std::string ex = std::to_string(e < 0 ? -e : e);
  out += (ex.size() < 2 ? "0" : "") + ex;
  return out;
}

}  // namespace xleg
