// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "support.hpp"
#include "xleg/legendre.hpp"
#include "xleg/operators.hpp"
#include "xleg/xfamily.hpp"

using namespace xleg;

TEST_CASE("the exceptional operator with tau = 1 is the classical one") {
  for (std::size_t k = 0; k <= 10; ++k) {
    const Poly probe = Poly::monomial(1, k);
    CHECK(apply_T_hat(OperatorSpec::classical(), probe) == RatFun(apply_classical(probe)));
  }
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(apply_classical(legendre_poly(n)) == eigenvalue(n) * legendre_poly(n));
  }
  CHECK(eigenvalue(3) == Rat(-12));
  CHECK_THROWS_AS(OperatorSpec{Poly()}, std::invalid_argument);
}

TEST_CASE("first-order operators by hand") {
  // A(1, z) z^2 = z * 2z - 1 * z^2 = z^2
  CHECK(apply_first_order(FirstOrderOp::A(Poly{1}, Poly{0, 1}), RatFun(Poly{0, 0, 1})) == RatFun(Poly{0, 0, 1}));
  // B(1, 1) f = (1 - z^2) f' - 2 z f; on f = 1 that is -2z
  CHECK(apply_first_order(FirstOrderOp::B(Poly{1}, Poly{1}), RatFun(Poly{1})) == RatFun(Poly{0, -2}));
  // A(z+2, 1) f = f' / (z + 2)
  CHECK(apply_first_order(FirstOrderOp::A(Poly{2, 1}, Poly{1}), RatFun(Poly{0, 0, 3})) ==
        RatFun(Poly{0, 6}, Poly{2, 1}));
  CHECK_THROWS(FirstOrderOp::A(Poly(), Poly{1}));
  CHECK_THROWS(FirstOrderOp::B(Poly{1}, Poly()));
}

TEST_CASE("factorization identities from the classical operator") {
  const FactorizationReport rep = verify_factorization(FamilyKey{}, 0, Rat(1), 8);
  CHECK(rep.probe_degree == 8);
  REQUIRE(rep.identities.size() == 3);
  for (const auto& id : rep.identities) {
    CAPTURE(id.identity);
    CHECK(id.pass);
    CHECK_FALSE(id.counterexample_probe.has_value());
  }
  const FactorizationReport one = verify_factorization(FamilyKey{}, 3, Rat(-2, 5), 0);
  CHECK(one.probe_degree == 0);
  CHECK(one.pass());
  for (std::size_t m = 0; m <= 5; ++m) {
    for (const Rat& t : {Rat(1), Rat(-1, 4), Rat(7, 2)}) CHECK(verify_factorization(FamilyKey{}, m, t).pass());
  }
}

TEST_CASE("factorization identities from one-parameter families") {
  for (std::size_t base_m = 0; base_m <= 3; ++base_m) {
    for (std::size_t m = 0; m <= 4; ++m) {
      if (m == base_m) continue;
      const FamilyKey base({base_m}, {Rat(3, 2)});
      CAPTURE(to_string(base));
      CAPTURE(m);
      const FactorizationReport rep = verify_factorization(base, m, Rat(-1, 3));
      CHECK(rep.probe_degree == default_probe_degree(make_step(base, m, Rat(-1, 3))));
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("a step's transformed tau is the next tau in the chain") {
  const CdtStep step = make_step(FamilyKey({1}, {Rat(2)}), 2, Rat(-8, 5));
  CHECK(step.tau == tau(FamilyKey({1}, {Rat(2)})));
  CHECK(step.tau_step == tau(FamilyKey({1, 2}, {Rat(2), Rat(-8, 5)})));
  CHECK(step.pi_m == exceptional_poly(FamilyKey({1}, {Rat(2)}), 2));
}

TEST_CASE("intertwining relation") {
  CHECK(verify_intertwining(FamilyKey{}, 0, Rat(1), 1));
  CHECK(verify_intertwining(FamilyKey{}, 1, Rat(1, 3), 0));
  CHECK_THROWS_AS(verify_intertwining(FamilyKey{}, 2, Rat(1), 2), std::invalid_argument);
  const FamilyKey base({1}, {Rat(2)});
  for (std::size_t i = 0; i <= 6; ++i) {
    if (i == 2) continue;
    CHECK(verify_intertwining(base, 2, Rat(-8, 5), i));
  }
}

TEST_CASE("the intertwining factor is lambda_i - lambda_m") {
  // With A(tau, phi) f = Wr(phi, f) / tau the opposite sign fails.
  const std::size_t m = 4;
  const Rat t(26, 5);
  const Poly tau_m = tau(FamilyKey({m}, {t}));
  const Poly pi_m = legendre_poly(m);
  for (std::size_t i : {0u, 1u, 2u, 5u}) {
    const RatFun ba = apply_first_order(FirstOrderOp::B(pi_m, tau_m),
                                        apply_first_order(FirstOrderOp::A(Poly{1}, pi_m), RatFun(legendre_poly(i))));
    const Poly p = exceptional_poly(FamilyKey({m}, {t}), i);
    CHECK(ba == RatFun((eigenvalue(i) - eigenvalue(m)) * p));
    CHECK_FALSE(ba == RatFun((eigenvalue(m) - eigenvalue(i)) * p));
  }
}

TEST_CASE("overlap and Wronskian relation, boundary behaviour") {
  const FamilyKey bases[] = {FamilyKey{}, FamilyKey({1}, {Rat(2)}), FamilyKey({0, 3}, {Rat(-1, 4), Rat(7, 2)})};
  for (const FamilyKey& base : bases) {
    const Poly tb = tau(base);
    for (std::size_t m = 0; m <= 4; ++m) {
      const Poly pi_m = exceptional_poly(base, m);
      for (std::size_t i = 0; i <= 5; ++i) {
        if (i == m) continue;
        CAPTURE(to_string(base));
        CAPTURE(m);
        CAPTURE(i);
        CHECK(verify_overlap_wronskian(base, m, i));
        CHECK(boundary_wronskian(tb, exceptional_poly(base, i), pi_m)(Rat(-1)).is_zero());
      }
    }
  }
}

TEST_CASE("eigen equation on a small lattice") {
  const Rat ts[] = {Rat(1), Rat(-1, 4), Rat(7, 2)};
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = a + 1; b <= 4; ++b) {
      for (const Rat& ta : ts) {
        const XFamily family(FamilyKey({a, b}, {ta, ts[(a + 2 * b) % 3]}));
        for (std::size_t i = 0; i <= 10; ++i) CHECK(verify_eigen(family, i));
      }
    }
  }
  CHECK(verify_eigen(FamilyKey({4}, {Rat(26, 5)}), 5));
  CHECK(verify_eigen(FamilyKey({1, 2}, {Rat(2), Rat(-8, 5)}), 3));
  CHECK(verify_eigen(FamilyKey{}, 0));
  // A wrong polynomial fails the check.
  const XFamily f(FamilyKey({2}, {Rat(1)}));
  CHECK_FALSE(apply_T_hat_cleared(OperatorSpec(f.tau()), legendre_poly(3)) ==
              eigenvalue(3) * (f.tau() * legendre_poly(3)));
}
