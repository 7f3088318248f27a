// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xleg/family_key.hpp"
#include "xleg/ratfun.hpp"

namespace xleg {

class XFamily;

/// lambda_i = -i(i+1).
Rat eigenvalue(std::size_t i);

/// The operator T(tau) = (1-z^2)(D^2 - 2 tau'/tau D + tau''/tau) - 2z D.
class OperatorSpec {
 public:
  /// Throws std::invalid_argument for tau == 0.
  explicit OperatorSpec(Poly tau);
  static OperatorSpec classical() { return OperatorSpec(Poly::constant(1)); }
  const Poly& tau() const { return tau_; }

 private:
  Poly tau_;
};

/// T(tau) p as a reduced rational function.
RatFun apply_T_hat(const OperatorSpec& spec, const Poly& p);
/// tau * T(tau) p, always a polynomial. T(tau) p = lambda p iff this equals
/// lambda * tau * p.
Poly apply_T_hat_cleared(const OperatorSpec& spec, const Poly& p);
/// The classical Legendre operator (1-z^2) p'' - 2z p'.
Poly apply_classical(const Poly& p);

enum class FirstOrderKind { A, B };

/// A(tau, phi) f = tau^{-1} (phi f' - phi' f)
/// B(phi, tau) f = phi^{-1} ((1-z^2)(tau f' - tau' f) - 2z tau f)
struct FirstOrderOp {
  FirstOrderKind kind;
  Poly first;
  Poly second;

  static FirstOrderOp A(Poly tau, Poly phi);
  static FirstOrderOp B(Poly phi, Poly tau);
};

RatFun apply_first_order(const FirstOrderOp& op, const RatFun& f);

/// One confluent step from the family `base` at level m with parameter t.
struct CdtStep {
  FamilyKey base;
  std::size_t m = 0;
  Rat t;
  Poly tau;       // tau of base
  Poly pi_m;      // P_{base; m}
  Poly tau_step;  // tau of (base, m) with parameter t
};

CdtStep make_step(const FamilyKey& base, std::size_t m, const Rat& t);

struct IdentityResult {
  std::string identity;
  bool pass = true;
  /// First probe z^k on which the two sides differ.
  std::optional<Poly> counterexample_probe;
};

struct FactorizationReport {
  FamilyKey base;
  std::size_t m_step = 0;
  Rat t_step;
  std::size_t probe_degree = 0;
  std::vector<IdentityResult> identities;
  bool pass() const;
};

/// Default probe degree 2 * (max operator coefficient degree) + 2.
std::size_t default_probe_degree(const CdtStep& step);

/// Checks, on probes 1, z, ..., z^D,
///   T(tau)      = B(pi_m, tau)      A(tau, pi_m)      + lambda_m
///   T(tau_step) = B(pi_m, tau_step) A(tau_step, pi_m) + lambda_m
///   A(tau, pi_m) B(pi_m, tau) = A(tau_step, pi_m) B(pi_m, tau_step)
FactorizationReport verify_factorization(const FamilyKey& base, std::size_t m_step,
                                         const Rat& t_step,
                                         std::optional<std::size_t> probe_degree = std::nullopt);

/// T(tau_m) P_{m;i} == lambda_i P_{m;i}, exactly.
bool verify_eigen(const XFamily& family, std::size_t i);
bool verify_eigen(const FamilyKey& key, std::size_t i);

/// (lambda_i - lambda_m) pi_{m;i} == B(pi_m, tau_m) A(tau, pi_m) pi_i.
/// Throws std::invalid_argument when i == m_step.
bool verify_intertwining(const FamilyKey& base, std::size_t m_step, const Rat& t_step,
                         std::size_t i);

/// (lambda_i - lambda_m) rho_{im} == (1-z^2) tau^{-1} A(tau, pi_m) pi_i with
/// rho_{im} taken from the recursion on `base`.
bool verify_overlap_wronskian(const FamilyKey& base, std::size_t m_step, std::size_t i);

/// (1-z^2) Wr(pi_i, pi_m) / tau^2.
RatFun boundary_wronskian(const Poly& tau, const Poly& pi_i, const Poly& pi_m);

}  // namespace xleg
