// SPDX-License-Identifier: Apache-2.0
#include "xleg/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "xleg/errors.hpp"
#include "xleg/xfamily.hpp"

namespace xleg {

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(primitive_part(p));
  Poly dp = differentiate(p);
  if (dp.is_zero()) return;
  chain_.push_back(primitive_part(dp));
  while (true) {
    const Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back(primitive_part(-r));
  }
}

std::size_t SturmChain::sign_variations(const Rat& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const Poly& q : chain_) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t root_count(const Poly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("root_count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("root_count needs lo < hi");
  std::size_t endpoint_roots = 0;
  Poly q = p;
  for (const Rat& x : {lo, hi}) {
    const Poly linear{-x, 1};
    if (q(x).is_zero()) {
      ++endpoint_roots;
      while (q(x).is_zero()) q = exact_quotient(q, linear);
    }
  }
  const SturmChain chain(q);
  return endpoint_roots + (chain.sign_variations(lo) - chain.sign_variations(hi));
}

bool admissible_by_formula(const FamilyKey& key) {
  for (std::size_t j = 0; j < key.size(); ++j) {
    const Rat bound = -Rat(static_cast<long>(key.m[j])) - Rat(1, 2);
    if (!(key.t[j] > bound)) return false;
  }
  return true;
}

namespace {

bool admissible_checked(const FamilyKey& key, const Poly& tau) {
  const bool by_formula = admissible_by_formula(key);
  const bool by_sturm = root_count(tau, Rat(-1), Rat(1)) == 0;
  if (by_formula != by_sturm) {
    throw InvariantViolation("admissibility mismatch for " + to_string(key) + ": formula says " +
                             (by_formula ? "admissible" : "inadmissible") + ", Sturm count says " +
                             (by_sturm ? "no roots" : "roots") + " on [-1,1]");
  }
  return by_formula;
}

}  // namespace

bool is_admissible(const FamilyKey& key) {
  const FamilyKey canon = canonicalize(key);
  return admissible_checked(canon, tau(canon));
}

bool is_admissible(const XFamily& family) { return admissible_checked(family.key(), family.tau()); }

Rat norm_formula(const FamilyKey& key, std::size_t i) {
  const FamilyKey canon = canonicalize(key);
  if (!admissible_by_formula(canon)) {
    throw InadmissibleError("norm requested for inadmissible " + to_string(canon));
  }
  Rat denom(static_cast<long>(1 + 2 * i));
  for (std::size_t j = 0; j < canon.size(); ++j) {
    if (canon.m[j] == i) denom += Rat(2) * canon.t[j];
  }
  return Rat(2) / denom;
}

Rat norm_of(const XFamily& family, std::size_t i) {
  if (!is_admissible(family)) {
    throw InadmissibleError("norm requested for inadmissible " + to_string(family.key()));
  }
  const Rat expected = norm_formula(family.key(), i);
  const Rat from_overlap = family.overlap_at(i, i, Rat(1));
  if (expected != from_overlap) {
    throw InvariantViolation("norm mismatch for " + to_string(family.key()) + ", i=" +
                             std::to_string(i) + ": formula " + expected.str() + ", R(1) " +
                             from_overlap.str());
  }
  return expected;
}

Rat norm_of(const FamilyKey& key, std::size_t i) { return norm_of(XFamily(key), i); }

bool OrthogonalityReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

OrthogonalityReport orthogonality_check(const XFamily& family, std::size_t max_i) {
  if (!is_admissible(family)) {
    throw InadmissibleError("orthogonality requested for inadmissible " + to_string(family.key()));
  }
  OrthogonalityReport report;
  for (std::size_t i1 = 0; i1 <= max_i; ++i1) {
    report.norms.emplace(i1, norm_formula(family.key(), i1));
    for (std::size_t i2 = i1; i2 <= max_i; ++i2) {
      OrthogonalityEntry e;
      e.i1 = i1;
      e.i2 = i2;
      e.expected = i1 == i2 ? report.norms.at(i1) : Rat();
      e.actual = family.overlap_at(i1, i2, Rat(1));
      e.pass = e.expected == e.actual;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace xleg
