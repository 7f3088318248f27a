// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xleg/family_key.hpp"
#include "xleg/ratfun.hpp"

namespace xleg::io {

using json = nlohmann::json;

/// Rat <-> "p/q". Parsing also accepts "k" and JSON integers.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// Poly <-> ["c0", "c1", ...], index = power. Zero is [].
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// RatFun <-> {"num": <Poly>, "den": <Poly>}.
json to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

struct PolyRecord {
  std::size_t i = 0;
  std::size_t degree = 0;
  Poly coeffs;
};

/// One generated family:
/// {"m":[..], "t":["p/q",..], "tau":<Poly>,
///  "polys":[{"i":k,"degree":d,"coeffs":<Poly>}..], "norms":["p/q",..],
///  "admissible":bool, "original_key":{"m":[..],"t":[..]}}
/// norms[k] belongs to polys[k]; empty when not admissible.
struct FamilyRecord {
  FamilyKey key;
  FamilyKey original_key;
  Poly tau;
  std::vector<PolyRecord> polys;
  std::vector<Rat> norms;
  bool admissible = false;
};

json to_json(const FamilyKey& key);
FamilyKey key_from_json(const json& j);
json to_json(const FamilyRecord& rec);
FamilyRecord family_from_json(const json& j);

/// {"identity":..., "key":..., "i":..., "pass":..., "counterexample_probe":...}
/// plus "kind" when given.
json report_entry(const std::string& identity, const FamilyKey& key, std::optional<std::size_t> i,
                  bool pass, const std::optional<Poly>& counterexample_probe,
                  const std::optional<std::string>& kind = std::nullopt);

}  // namespace xleg::io
