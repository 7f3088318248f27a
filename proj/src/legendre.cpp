// SPDX-License-Identifier: Apache-2.0
#include "xleg/legendre.hpp"

#include <algorithm>
#include <mutex>

namespace xleg {

std::vector<Poly> LegendreCache::compute_polys(std::size_t up_to) {
  std::vector<Poly> p;
  p.reserve(up_to + 1);
  p.push_back(Poly::constant(1));
  if (up_to >= 1) p.push_back(Poly::z());
  for (std::size_t i = 1; i + 1 <= up_to; ++i) {
    const Rat a(static_cast<long>(2 * i + 1), static_cast<long>(i + 1));
    const Rat b(static_cast<long>(i), static_cast<long>(i + 1));
    p.push_back(a * (Poly::z() * p[i]) - b * p[i - 1]);
  }
  return p;
}

Poly LegendreCache::compute_poly(std::size_t i) { return compute_polys(i).back(); }

Poly LegendreCache::compute_overlap(std::size_t i1, std::size_t i2) {
  const auto p = compute_polys(std::max(i1, i2));
  return antiderivative_from_minus1(p[i1] * p[i2]);
}

const Poly& LegendreCache::poly(std::size_t i) {
  {
    std::shared_lock lock(mu_);
    if (i < polys_.size()) return polys_[i];
  }
  std::unique_lock lock(mu_);
  if (polys_.size() <= i) {
    // Extend with the recurrence from whatever is already present.
    if (polys_.empty()) polys_.push_back(Poly::constant(1));
    if (polys_.size() == 1 && i >= 1) polys_.push_back(Poly::z());
    while (polys_.size() <= i) {
      const std::size_t k = polys_.size() - 1;
      const Rat a(static_cast<long>(2 * k + 1), static_cast<long>(k + 1));
      const Rat b(static_cast<long>(k), static_cast<long>(k + 1));
      polys_.push_back(a * (Poly::z() * polys_[k]) - b * polys_[k - 1]);
    }
  }
  return polys_[i];
}

const Poly& LegendreCache::overlap(std::size_t i1, std::size_t i2) {
  const auto key = std::minmax(i1, i2);
  {
    std::shared_lock lock(mu_);
    if (auto it = overlaps_.find(key); it != overlaps_.end()) return it->second;
  }
  // poly() takes the lock itself; compute before re-locking.
  Poly value = antiderivative_from_minus1(poly(key.first) * poly(key.second));
  std::unique_lock lock(mu_);
  return overlaps_.try_emplace(key, std::move(value)).first->second;
}

LegendreCache& LegendreCache::global() {
  static LegendreCache cache;
  return cache;
}

Poly legendre_poly(std::size_t i) { return LegendreCache::global().poly(i); }

Poly overlap_R(std::size_t i1, std::size_t i2) { return LegendreCache::global().overlap(i1, i2); }

Rat classical_norm(std::size_t i) { return Rat(2, static_cast<long>(2 * i + 1)); }

}  // namespace xleg
