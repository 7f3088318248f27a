// SPDX-License-Identifier: Apache-2.0
#include "xleg/family_key.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace xleg {

FamilyKey::FamilyKey(std::vector<std::size_t> indices, std::vector<Rat> params)
    : m(std::move(indices)), t(std::move(params)) {
  if (m.size() != t.size()) {
    throw std::invalid_argument("family key: " + std::to_string(m.size()) + " indices but " +
                                std::to_string(t.size()) + " parameters");
  }
}

bool FamilyKey::contains(std::size_t i) const {
  return std::find(m.begin(), m.end(), i) != m.end();
}

std::size_t FamilyKey::index_sum() const { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

FamilyKey FamilyKey::extended(std::size_t i, const Rat& ti) const {
  FamilyKey k = *this;
  k.m.push_back(i);
  k.t.push_back(ti);
  return k;
}

FamilyKey canonicalize(const FamilyKey& key) {
  if (key.m.size() != key.t.size()) throw std::invalid_argument("family key: length mismatch");
  std::map<std::size_t, Rat> merged;
  for (std::size_t j = 0; j < key.m.size(); ++j) merged[key.m[j]] += key.t[j];
  FamilyKey out;
  for (const auto& [idx, param] : merged) {
    if (param.is_zero()) continue;
    out.m.push_back(idx);
    out.t.push_back(param);
  }
  return out;
}

bool is_canonical(const FamilyKey& key) {
  if (key.m.size() != key.t.size()) return false;
  for (std::size_t j = 0; j < key.m.size(); ++j) {
    if (key.t[j].is_zero()) return false;
    if (j > 0 && key.m[j - 1] >= key.m[j]) return false;
  }
  return true;
}

std::string to_string(const FamilyKey& key) {
  std::string s = "m=(";
  for (std::size_t j = 0; j < key.m.size(); ++j) s += (j ? "," : "") + std::to_string(key.m[j]);
  s += ") t=(";
  for (std::size_t j = 0; j < key.t.size(); ++j) s += (j ? "," : "") + key.t[j].str();
  return s + ")";
}

}  // namespace xleg
