// SPDX-License-Identifier: Apache-2.0
#include <thread>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "xleg/legendre.hpp"

using namespace xleg;

namespace {

// Rodrigues: P_n = D^n (z^2 - 1)^n / (2^n n!).
Poly rodrigues(unsigned n) {
  Poly p = pow(Poly{-1, 0, 1}, n);
  Rat scale(1);
  for (unsigned k = 1; k <= n; ++k) {
    p = differentiate(p);
    scale *= Rat(2 * static_cast<long>(k));
  }
  return p / scale;
}

}  // namespace

TEST_CASE("legendre polynomials match Rodrigues' formula") {
  for (unsigned n = 0; n <= 18; ++n) {
    CAPTURE(n);
    CHECK(legendre_poly(n) == rodrigues(n));
  }
  CHECK(legendre_poly(2) == Poly{Rat(-1, 2), 0, Rat(3, 2)});
  CHECK(legendre_poly(4) == Poly{Rat(3, 8), 0, Rat(-30, 8), 0, Rat(35, 8)});
}

TEST_CASE("legendre endpoint values and eigen equation") {
  for (std::size_t n = 0; n <= 15; ++n) {
    const Poly& p = legendre_poly(n);
    CHECK(p(Rat(1)) == Rat(1));
    CHECK(p(Rat(-1)) == Rat(n % 2 == 0 ? 1 : -1));
    const Poly lhs = Poly{1, 0, -1} * differentiate(differentiate(p)) - Poly{0, 2} * differentiate(p);
    CHECK(lhs == Rat(-static_cast<long>(n * (n + 1))) * p);
  }
}

TEST_CASE("overlaps vanish at -1, differentiate to products and are orthogonal at 1") {
  for (std::size_t a = 0; a <= 9; ++a) {
    for (std::size_t b = 0; b <= 9; ++b) {
      const Poly r = overlap_R(a, b);
      CHECK(r(Rat(-1)).is_zero());
      CHECK(differentiate(r) == legendre_poly(a) * legendre_poly(b));
      CHECK(r(Rat(1)) == (a == b ? classical_norm(a) : Rat(0)));
      CHECK(r == overlap_R(b, a));
    }
  }
  CHECK(classical_norm(3) == Rat(2, 7));
  CHECK(overlap_R(0, 0) == Poly{1, 1});
}

TEST_CASE("legendre cache is consistent under concurrent access") {
  LegendreCache cache;
  std::vector<std::thread> workers;
  std::vector<int> ok(4, 1);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t n = 30; n-- > 0;) {
        if (!(cache.poly(n) == LegendreCache::compute_poly(n))) ok[static_cast<std::size_t>(w)] = 0;
        if (!(cache.overlap(n % 7, n) == LegendreCache::compute_overlap(n % 7, n))) ok[static_cast<std::size_t>(w)] = 0;
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int v : ok) CHECK(v == 1);
  const auto batch = LegendreCache::compute_polys(5);
  REQUIRE(batch.size() == 6);
  CHECK(batch[5] == rodrigues(5));
}
