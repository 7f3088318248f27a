// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "xleg/poly.hpp"

namespace xleg {

/// Append-only cache of classical Legendre polynomials P_i and their overlap
/// antiderivatives R_{ij}(z) = int_{-1}^z P_i P_j.
///
/// Readers share the lock; a miss takes the exclusive lock and fills. The
/// cache never changes results: compute_poly/compute_overlap give the same
/// values without it.
class LegendreCache {
 public:
  const Poly& poly(std::size_t i);
  /// Symmetric; only (min, max) is stored.
  const Poly& overlap(std::size_t i1, std::size_t i2);

  /// Three-term recurrence (i+1) P_{i+1} = (2i+1) z P_i - i P_{i-1}.
  static std::vector<Poly> compute_polys(std::size_t up_to);
  static Poly compute_poly(std::size_t i);
  static Poly compute_overlap(std::size_t i1, std::size_t i2);

  /// Process-wide instance used by the free functions below.
  static LegendreCache& global();

 private:
  std::shared_mutex mu_;
  std::deque<Poly> polys_;  // references stay valid across push_back
  std::map<std::pair<std::size_t, std::size_t>, Poly> overlaps_;
};

Poly legendre_poly(std::size_t i);
Poly overlap_R(std::size_t i1, std::size_t i2);
/// 2 / (2i + 1).
Rat classical_norm(std::size_t i);

}  // namespace xleg
