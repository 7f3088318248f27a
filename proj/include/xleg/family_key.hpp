// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xleg/rat.hpp"

namespace xleg {

/// Indices m = (m_1, ..., m_n) of the deformed levels and their parameters
/// t = (t_{m_1}, ..., t_{m_n}). n = 0 is the classical family.
struct FamilyKey {
  std::vector<std::size_t> m;
  std::vector<Rat> t;

  FamilyKey() = default;
  /// Throws std::invalid_argument if the lengths differ.
  FamilyKey(std::vector<std::size_t> indices, std::vector<Rat> params);

  std::size_t size() const { return m.size(); }
  bool contains(std::size_t i) const;
  /// Sum of m_j.
  std::size_t index_sum() const;
  /// The key with (i, ti) appended; no canonicalization.
  FamilyKey extended(std::size_t i, const Rat& ti) const;

  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

/// Merge duplicate indices by adding their parameters, drop zero parameters,
/// sort by index.
FamilyKey canonicalize(const FamilyKey& key);
bool is_canonical(const FamilyKey& key);

/// "m=(1,2) t=(2/1,-8/5)"
std::string to_string(const FamilyKey& key);

}  // namespace xleg
