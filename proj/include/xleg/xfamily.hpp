// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "xleg/family_key.hpp"
#include "xleg/poly_matrix.hpp"
#include "xleg/ratfun.hpp"

namespace xleg {

// Determinantal construction. These accept any key, including ones with
// repeated indices; the canonical form gives the same tau and polynomials.

/// [R_m]_{kl} = delta_kl + t_l R_{m_k m_l}(z).
PolyMatrix build_matrix(const FamilyKey& key);
/// det R_m.
Poly tau(const FamilyKey& key);
/// adj(R_m) * (P_{m_1}, ..., P_{m_n}).
std::vector<Poly> q_vector(const FamilyKey& key);
/// P_{m;i}: last entry of q_vector on the extended key (m, i). Computed as
/// the determinant of R_{(m,i)} with its last column replaced by
/// (P_{m_1}, ..., P_{m_n}, P_i), which is the same cofactor sum and never
/// involves t_i.
Poly exceptional_poly(const FamilyKey& key, std::size_t i);
/// Degree of P_{m;i} for a key with distinct indices:
/// 2 sum(m) + n + i - (2i + 1) [i in m].
std::size_t expected_degree(const FamilyKey& key, std::size_t i);
/// Degree of tau for a key with distinct indices: 2 sum(m) + n.
std::size_t expected_tau_degree(const FamilyKey& key);

/// Lazy evaluation of the step-by-step confluent Darboux chain.
///
/// Level 0 is the classical operator (tau = 1, P_i, R_{ij}); level j applies
/// the j-th (m_j, t_j) of the key. Overlaps, tau and polynomials at each
/// level are memoized. Not thread-safe.
class CdtChain {
 public:
  explicit CdtChain(FamilyKey key);

  const FamilyKey& key() const { return key_; }
  std::size_t levels() const { return key_.size(); }

  /// R_{m_level; i1 i2}, symmetric in (i1, i2).
  const RatFun& overlap(std::size_t level, std::size_t i1, std::size_t i2);
  /// Numerator of R_{m_level; i1 i2} over tau(level).
  const Poly& numerator(std::size_t level, std::size_t i1, std::size_t i2);
  /// 1 + t_level R_{m_{level-1}; m_level m_level} = tau_level / tau_{level-1}; level >= 1.
  const RatFun& step_factor(std::size_t level);
  const Poly& tau(std::size_t level);
  const Poly& poly(std::size_t level, std::size_t i);

 private:
  FamilyKey key_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Poly> numerators_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, RatFun> overlaps_;
  std::map<std::size_t, RatFun> factors_;
  std::map<std::size_t, Poly> taus_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> polys_;
};

struct RecursiveFamily {
  Poly tau;
  std::map<std::size_t, Poly> xpolys;
  /// All (i1 <= i2 <= maxI) overlaps at the last level.
  std::map<std::pair<std::size_t, std::size_t>, RatFun> overlaps;
};

/// Run the chain for i <= max_i. Throws DegenerateParameterError if some
/// step factor vanishes identically.
RecursiveFamily recursive_family(const FamilyKey& key, std::size_t max_i);

/// Cached construction for one canonical key.
///
/// The constructor canonicalizes and builds matrix, tau, adjugate and Q.
/// After that the object is logically immutable; poly() and overlap() fill
/// memo tables under a lock and may be called from several threads.
class XFamily {
 public:
  explicit XFamily(const FamilyKey& key);

  const FamilyKey& key() const { return key_; }
  /// The key as given, before canonicalization.
  const FamilyKey& original_key() const { return original_; }
  bool was_canonicalized() const { return !(key_ == original_); }

  const PolyMatrix& matrix() const { return matrix_; }
  const Poly& tau() const { return tau_; }
  const PolyMatrix& adjugate() const { return adjugate_; }
  const std::vector<Poly>& q() const { return q_; }

  /// P_{m;i} = tau P_i - sum_l t_l R_{i m_l} Q_l; same value as exceptional_poly.
  Poly poly(std::size_t i) const;
  /// R_{m;i1 i2} from the recursion.
  RatFun overlap(std::size_t i1, std::size_t i2) const;
  /// R_{m;i1 i2}(x) without reducing the rational function.
  Rat overlap_at(std::size_t i1, std::size_t i2, const Rat& x) const;

 private:
  FamilyKey original_;
  FamilyKey key_;
  PolyMatrix matrix_;
  Poly tau_;
  PolyMatrix adjugate_;
  std::vector<Poly> q_;

  mutable std::mutex poly_mu_;
  mutable std::map<std::size_t, Poly> polys_;
  mutable std::mutex chain_mu_;
  mutable std::unique_ptr<CdtChain> chain_;
};

}  // namespace xleg
