// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "xleg/poly.hpp"
#include "xleg/rat.hpp"

namespace xleg::test {

/// Sparse construction: sum of c * z^k.
inline Poly terms(std::initializer_list<std::pair<std::size_t, Rat>> list) {
  Poly p;
  for (const auto& [k, c] : list) p += Poly::monomial(c, k);
  return p;
}

inline Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return Rat(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  const int d = deg(rng);
  std::vector<Rat> c;
  for (int k = 0; k <= d; ++k) c.push_back(random_rat(rng));
  return Poly(std::move(c));
}

}  // namespace xleg::test
