// SPDX-License-Identifier: Apache-2.0
#include "xleg/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "xleg/xfamily.hpp"

namespace xleg {

namespace {

const Poly& one_minus_z2() {
  static const Poly p{1, 0, -1};
  return p;
}

const Poly& two_z() {
  static const Poly p{0, 2};
  return p;
}

// Unreduced quotient n/d. The probe checks compare by cross-multiplication
// and never need a gcd.
struct Frac {
  Poly n;
  Poly d;
};

Frac operator+(const Frac& a, const Frac& b) {
  if (a.d == b.d) return {a.n + b.n, a.d};
  return {a.n * b.d + b.n * a.d, a.d * b.d};
}

bool same(const Frac& a, const Frac& b) { return a.n * b.d == b.n * a.d; }

// d^2 Wr(phi, n/d) = phi (n'd - nd') - phi' n d.
Poly wr_numerator(const Poly& phi, const Frac& f) {
  return phi * (differentiate(f.n) * f.d - f.n * differentiate(f.d)) - differentiate(phi) * (f.n * f.d);
}

Frac apply_A_frac(const Poly& tau, const Poly& phi, const Frac& f) {
  return {wr_numerator(phi, f), tau * (f.d * f.d)};
}

Frac apply_B_frac(const Poly& phi, const Poly& tau, const Frac& f) {
  // (1-z^2) Wr(tau, f) - 2 z tau f, over phi.
  const Poly nd = f.n * f.d;
  return {one_minus_z2() * wr_numerator(tau, f) - two_z() * (tau * nd), phi * (f.d * f.d)};
}

}  // namespace

Rat eigenvalue(std::size_t i) {
  const long k = static_cast<long>(i);
  return Rat(-k * (k + 1));
}

OperatorSpec::OperatorSpec(Poly tau) : tau_(std::move(tau)) {
  if (tau_.is_zero()) throw std::invalid_argument("operator with tau = 0");
}

Poly apply_T_hat_cleared(const OperatorSpec& spec, const Poly& p) {
  const Poly& tau = spec.tau();
  const Poly dtau = differentiate(tau);
  const Poly d2tau = differentiate(dtau);
  const Poly dp = differentiate(p);
  const Poly d2p = differentiate(dp);
  return one_minus_z2() * (tau * d2p - Rat(2) * (dtau * dp) + d2tau * p) - two_z() * (tau * dp);
}

RatFun apply_T_hat(const OperatorSpec& spec, const Poly& p) {
  return RatFun(apply_T_hat_cleared(spec, p), spec.tau());
}

Poly apply_classical(const Poly& p) {
  const Poly dp = differentiate(p);
  return one_minus_z2() * differentiate(dp) - two_z() * dp;
}

FirstOrderOp FirstOrderOp::A(Poly tau, Poly phi) {
  if (tau.is_zero() || phi.is_zero()) throw std::invalid_argument("A(tau, phi) with a zero argument");
  return {FirstOrderKind::A, std::move(tau), std::move(phi)};
}

FirstOrderOp FirstOrderOp::B(Poly phi, Poly tau) {
  if (tau.is_zero() || phi.is_zero()) throw std::invalid_argument("B(phi, tau) with a zero argument");
  return {FirstOrderKind::B, std::move(phi), std::move(tau)};
}

RatFun apply_first_order(const FirstOrderOp& op, const RatFun& f) {
  const RatFun df = differentiate(f);
  if (op.kind == FirstOrderKind::A) {
    const Poly& tau = op.first;
    const Poly& phi = op.second;
    const RatFun wr = RatFun(phi) * df - RatFun(differentiate(phi)) * f;
    return wr / RatFun(tau);
  }
  const Poly& phi = op.first;
  const Poly& tau = op.second;
  const RatFun inner = RatFun(one_minus_z2()) * (RatFun(tau) * df - RatFun(differentiate(tau)) * f) -
                       RatFun(two_z() * tau) * f;
  return inner / RatFun(phi);
}

CdtStep make_step(const FamilyKey& base, std::size_t m, const Rat& t) {
  CdtStep s;
  s.base = base;
  s.m = m;
  s.t = t;
  s.tau = tau(base);
  s.pi_m = exceptional_poly(base, m);
  s.tau_step = tau(canonicalize(base.extended(m, t)));
  return s;
}

bool FactorizationReport::pass() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.pass; });
}

std::size_t default_probe_degree(const CdtStep& step) {
  // (1 - z^2) multiplies tau in every coefficient.
  const int coeff_degree = std::max({step.tau.degree(), step.tau_step.degree(), step.pi_m.degree()}) + 2;
  return 2 * static_cast<std::size_t>(coeff_degree) + 2;
}

FactorizationReport verify_factorization(const FamilyKey& base, std::size_t m_step,
                                         const Rat& t_step, std::optional<std::size_t> probe_degree) {
  const CdtStep step = make_step(base, m_step, t_step);
  FactorizationReport report;
  report.base = base;
  report.m_step = m_step;
  report.t_step = t_step;
  report.probe_degree = probe_degree.value_or(default_probe_degree(step));

  const Rat lambda = eigenvalue(m_step);
  const Poly& tau_b = step.tau;
  const Poly& tau_a = step.tau_step;
  const Poly& pi = step.pi_m;

  IdentityResult fact_before{"T(tau) = B(pi,tau) A(tau,pi) + lambda_m", true, std::nullopt};
  IdentityResult fact_after{"T(tau_m) = B(pi,tau_m) A(tau_m,pi) + lambda_m", true, std::nullopt};
  IdentityResult swapped{"A(tau,pi) B(pi,tau) = A(tau_m,pi) B(pi,tau_m)", true, std::nullopt};

  for (std::size_t k = 0; k <= report.probe_degree; ++k) {
    const Poly probe = Poly::monomial(1, k);
    const Frac f{probe, Poly::constant(1)};
    const Frac lambda_f{lambda * probe, Poly::constant(1)};
    if (fact_before.pass) {
      const Frac lhs{apply_T_hat_cleared(OperatorSpec(tau_b), probe), tau_b};
      const Frac rhs = apply_B_frac(pi, tau_b, apply_A_frac(tau_b, pi, f)) + lambda_f;
      if (!same(lhs, rhs)) {
        fact_before.pass = false;
        fact_before.counterexample_probe = probe;
      }
    }
    if (fact_after.pass) {
      const Frac lhs{apply_T_hat_cleared(OperatorSpec(tau_a), probe), tau_a};
      const Frac rhs = apply_B_frac(pi, tau_a, apply_A_frac(tau_a, pi, f)) + lambda_f;
      if (!same(lhs, rhs)) {
        fact_after.pass = false;
        fact_after.counterexample_probe = probe;
      }
    }
    if (swapped.pass) {
      const Frac lhs = apply_A_frac(tau_b, pi, apply_B_frac(pi, tau_b, f));
      const Frac rhs = apply_A_frac(tau_a, pi, apply_B_frac(pi, tau_a, f));
      if (!same(lhs, rhs)) {
        swapped.pass = false;
        swapped.counterexample_probe = probe;
      }
    }
  }
  report.identities = {std::move(fact_before), std::move(fact_after), std::move(swapped)};
  return report;
}

bool verify_eigen(const XFamily& family, std::size_t i) {
  const Poly p = family.poly(i);
  return apply_T_hat_cleared(OperatorSpec(family.tau()), p) == eigenvalue(i) * (family.tau() * p);
}

bool verify_eigen(const FamilyKey& key, std::size_t i) { return verify_eigen(XFamily(key), i); }

bool verify_intertwining(const FamilyKey& base, std::size_t m_step, const Rat& t_step, std::size_t i) {
  if (i == m_step) {
    throw std::invalid_argument("intertwining relation needs i != m (factor lambda_i - lambda_m)");
  }
  const CdtStep step = make_step(base, m_step, t_step);
  const Poly pi_i = exceptional_poly(base, i);
  const Poly pi_mi = exceptional_poly(canonicalize(base.extended(m_step, t_step)), i);
  const Frac rhs = apply_B_frac(step.pi_m, step.tau_step,
                                apply_A_frac(step.tau, step.pi_m, Frac{pi_i, Poly::constant(1)}));
  return same(Frac{(eigenvalue(i) - eigenvalue(m_step)) * pi_mi, Poly::constant(1)}, rhs);
}

bool verify_overlap_wronskian(const FamilyKey& base, std::size_t m_step, std::size_t i) {
  const Poly tau_base = tau(base);
  const Poly pi_m = exceptional_poly(base, m_step);
  const Poly pi_i = exceptional_poly(base, i);
  CdtChain chain(base);
  const RatFun rho = chain.overlap(chain.levels(), i, m_step);
  const RatFun rhs = RatFun(Poly{1, 0, -1}, tau_base) *
                     apply_first_order(FirstOrderOp::A(tau_base, pi_m), RatFun(pi_i));
  return RatFun(Poly::constant(eigenvalue(i) - eigenvalue(m_step))) * rho == rhs;
}

RatFun boundary_wronskian(const Poly& tau, const Poly& pi_i, const Poly& pi_m) {
  const Poly wr = pi_i * differentiate(pi_m) - differentiate(pi_i) * pi_m;
  return RatFun(one_minus_z2() * wr, tau * tau);
}

}  // namespace xleg
