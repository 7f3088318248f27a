// SPDX-License-Identifier: Apache-2.0
#include "xleg/xfamily.hpp"

#include <algorithm>
#include <stdexcept>

#include "xleg/errors.hpp"
#include "xleg/legendre.hpp"

namespace xleg {

PolyMatrix build_matrix(const FamilyKey& key) {
  const std::size_t n = key.size();
  PolyMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      Poly e = key.t[l] * overlap_R(key.m[k], key.m[l]);
      if (k == l) e += Poly::constant(1);
      r.at(k, l) = std::move(e);
    }
  }
  return r;
}

Poly tau(const FamilyKey& key) { return build_matrix(key).det(); }

namespace {

std::vector<Poly> seed_vector(const FamilyKey& key) {
  std::vector<Poly> p;
  p.reserve(key.size());
  for (std::size_t mj : key.m) p.push_back(legendre_poly(mj));
  return p;
}

}  // namespace

std::vector<Poly> q_vector(const FamilyKey& key) {
  return build_matrix(key).adjugate() * seed_vector(key);
}

Poly exceptional_poly(const FamilyKey& key, std::size_t i) {
  const FamilyKey ext = key.extended(i, Rat(0));
  std::vector<Poly> seeds = seed_vector(ext);
  return build_matrix(ext).with_column(key.size(), seeds).det();
}

std::size_t expected_tau_degree(const FamilyKey& key) { return 2 * key.index_sum() + key.size(); }

std::size_t expected_degree(const FamilyKey& key, std::size_t i) {
  const std::size_t base = expected_tau_degree(key) + i;
  return key.contains(i) ? base - (2 * i + 1) : base;
}

// ---------------------------------------------------------------------------

CdtChain::CdtChain(FamilyKey key) : key_(std::move(key)) {}

const RatFun& CdtChain::step_factor(std::size_t level) {
  if (level == 0 || level > levels()) throw std::out_of_range("step_factor: bad level");
  if (auto it = factors_.find(level); it != factors_.end()) return it->second;
  RatFun f(tau(level), tau(level - 1));
  return factors_.emplace(level, std::move(f)).first->second;
}

// R_{j;ab} = N_{j;ab} / tau_j. With 1 + t R_{j-1;mm} = tau_j / tau_{j-1} the
// overlap step becomes N_{j;ab} = (tau_j N_{j-1;ab} - t N_{j-1;am} N_{j-1;bm}) / tau_{j-1},
// an exact polynomial division.
const Poly& CdtChain::numerator(std::size_t level, std::size_t i1, std::size_t i2) {
  if (level > levels()) throw std::out_of_range("overlap: bad level");
  const auto [a, b] = std::minmax(i1, i2);
  const auto memo_key = std::make_tuple(level, a, b);
  if (auto it = numerators_.find(memo_key); it != numerators_.end()) return it->second;
  Poly value;
  if (level == 0) {
    value = overlap_R(a, b);
  } else {
    const std::size_t mj = key_.m[level - 1];
    const Rat& t = key_.t[level - 1];
    // Copies: the recursive calls below may insert into numerators_.
    const Poly prev = numerator(level - 1, a, b);
    const Poly na = numerator(level - 1, a, mj);
    const Poly nb = numerator(level - 1, b, mj);
    value = exact_quotient(tau(level) * prev - t * (na * nb), tau(level - 1));
  }
  return numerators_.emplace(memo_key, std::move(value)).first->second;
}

const RatFun& CdtChain::overlap(std::size_t level, std::size_t i1, std::size_t i2) {
  const auto [a, b] = std::minmax(i1, i2);
  const auto memo_key = std::make_tuple(level, a, b);
  if (auto it = overlaps_.find(memo_key); it != overlaps_.end()) return it->second;
  RatFun value(numerator(level, a, b), tau(level));
  return overlaps_.emplace(memo_key, std::move(value)).first->second;
}

const Poly& CdtChain::tau(std::size_t level) {
  if (level > levels()) throw std::out_of_range("tau: bad level");
  if (auto it = taus_.find(level); it != taus_.end()) return it->second;
  Poly value = Poly::constant(1);
  if (level > 0) {
    const std::size_t mj = key_.m[level - 1];
    // tau_j = (1 + t R_{j-1;mm}) tau_{j-1}.
    value = tau(level - 1) + key_.t[level - 1] * numerator(level - 1, mj, mj);
    if (value.is_zero()) {
      throw DegenerateParameterError("step " + std::to_string(level) + " of " + to_string(key_) +
                                     ": 1 + t R vanishes identically");
    }
  }
  return taus_.emplace(level, std::move(value)).first->second;
}

const Poly& CdtChain::poly(std::size_t level, std::size_t i) {
  if (level > levels()) throw std::out_of_range("poly: bad level");
  if (auto it = polys_.find({level, i}); it != polys_.end()) return it->second;
  Poly value;
  if (level == 0) {
    value = legendre_poly(i);
  } else {
    const std::size_t mj = key_.m[level - 1];
    const Rat& t = key_.t[level - 1];
    const Poly pi = poly(level - 1, i);
    const Poly pm = poly(level - 1, mj);
    const Poly nim = numerator(level - 1, i, mj);
    value = exact_quotient(tau(level) * pi - t * (nim * pm), tau(level - 1));
  }
  return polys_.emplace(std::make_pair(level, i), std::move(value)).first->second;
}

RecursiveFamily recursive_family(const FamilyKey& key, std::size_t max_i) {
  CdtChain chain(key);
  const std::size_t top = chain.levels();
  RecursiveFamily out;
  out.tau = chain.tau(top);
  for (std::size_t i = 0; i <= max_i; ++i) out.xpolys.emplace(i, chain.poly(top, i));
  for (std::size_t a = 0; a <= max_i; ++a) {
    for (std::size_t b = a; b <= max_i; ++b) out.overlaps.emplace(std::make_pair(a, b), chain.overlap(top, a, b));
  }
  return out;
}

// ---------------------------------------------------------------------------

XFamily::XFamily(const FamilyKey& key)
    : original_(key),
      key_(canonicalize(key)),
      matrix_(build_matrix(key_)),
      tau_(matrix_.det()),
      adjugate_(matrix_.adjugate()),
      q_(adjugate_ * seed_vector(key_)) {}

Poly XFamily::poly(std::size_t i) const {
  {
    std::lock_guard lock(poly_mu_);
    if (auto it = polys_.find(i); it != polys_.end()) return it->second;
  }
  // Cofactor expansion of the bordered determinant along its last row:
  // P_{m;i} = tau P_i - sum_l t_l R_{i m_l} Q_l.
  Poly value = tau_ * legendre_poly(i);
  for (std::size_t l = 0; l < key_.size(); ++l) value -= key_.t[l] * (overlap_R(i, key_.m[l]) * q_[l]);
  std::lock_guard lock(poly_mu_);
  return polys_.try_emplace(i, std::move(value)).first->second;
}

RatFun XFamily::overlap(std::size_t i1, std::size_t i2) const {
  std::lock_guard lock(chain_mu_);
  if (!chain_) chain_ = std::make_unique<CdtChain>(key_);
  return chain_->overlap(chain_->levels(), i1, i2);
}

Rat XFamily::overlap_at(std::size_t i1, std::size_t i2, const Rat& x) const {
  Poly num;
  {
    std::lock_guard lock(chain_mu_);
    if (!chain_) chain_ = std::make_unique<CdtChain>(key_);
    num = chain_->numerator(chain_->levels(), i1, i2);
  }
  const Rat d = tau_(x);
  if (!d.is_zero()) return num(x) / d;
  // Removable singularities need the reduced form.
  return overlap(i1, i2)(x);
}

}  // namespace xleg
