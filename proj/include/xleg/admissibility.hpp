// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "xleg/family_key.hpp"
#include "xleg/poly.hpp"

namespace xleg {

class XFamily;

/// p, p', then negated remainders, each scaled to its primitive part (a
/// positive factor, so signs are unchanged). Ends at gcd(p, p') up to scale.
class SturmChain {
 public:
  /// Throws std::invalid_argument for p == 0.
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& chain() const { return chain_; }
  /// Sign changes of the chain at x, zeros skipped.
  std::size_t sign_variations(const Rat& x) const;

 private:
  std::vector<Poly> chain_;
};

/// Number of distinct real roots of p in the closed interval [lo, hi].
/// Endpoint roots are found by evaluation and divided out before the
/// open-interval Sturm count.
std::size_t root_count(const Poly& p, const Rat& lo, const Rat& hi);

/// t_j > -m_j - 1/2 for every j.
bool admissible_by_formula(const FamilyKey& key);

/// Formula verdict, cross-checked against root_count(tau, -1, 1) == 0.
/// Disagreement throws InvariantViolation.
bool is_admissible(const FamilyKey& key);
bool is_admissible(const XFamily& family);

/// 2/(1+2i) if i is not in m, 2/(1+2i+2t_i) otherwise. Throws
/// InadmissibleError for inadmissible keys.
Rat norm_formula(const FamilyKey& key, std::size_t i);

/// norm_formula, cross-checked against R_{m;ii}(1) from the recursion.
/// Throws InadmissibleError or InvariantViolation.
Rat norm_of(const XFamily& family, std::size_t i);
Rat norm_of(const FamilyKey& key, std::size_t i);

using NormTable = std::map<std::size_t, Rat>;

struct OrthogonalityEntry {
  std::size_t i1 = 0;
  std::size_t i2 = 0;
  Rat expected;  // 0 off the diagonal, the norm on it
  Rat actual;    // R_{m;i1 i2}(1)
  bool pass = false;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityEntry> entries;
  NormTable norms;
  bool pass() const;
};

/// Checks R_{m;i1 i2}(1) for all i1 <= i2 <= max_i. Throws InadmissibleError
/// for inadmissible keys.
OrthogonalityReport orthogonality_check(const XFamily& family, std::size_t max_i);

}  // namespace xleg
