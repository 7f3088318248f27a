// SPDX-License-Identifier: Apache-2.0
#include "xleg/json_io.hpp"

#include <stdexcept>

namespace xleg::io {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
  return Rat::parse(j.get<std::string>());
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of coefficient strings");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

json to_json(const RatFun& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFun ratfun_from_json(const json& j) {
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const FamilyKey& key) {
  json t = json::array();
  for (const Rat& r : key.t) t.push_back(to_json(r));
  return {{"m", key.m}, {"t", t}};
}

FamilyKey key_from_json(const json& j) {
  std::vector<Rat> t;
  for (const auto& e : j.at("t")) t.push_back(rat_from_json(e));
  return FamilyKey(j.at("m").get<std::vector<std::size_t>>(), std::move(t));
}

json to_json(const FamilyRecord& rec) {
  json out = to_json(rec.key);
  out["tau"] = to_json(rec.tau);
  json polys = json::array();
  for (const auto& p : rec.polys) {
    polys.push_back({{"i", p.i}, {"degree", p.degree}, {"coeffs", to_json(p.coeffs)}});
  }
  out["polys"] = std::move(polys);
  json norms = json::array();
  for (const Rat& n : rec.norms) norms.push_back(to_json(n));
  out["norms"] = std::move(norms);
  out["admissible"] = rec.admissible;
  out["original_key"] = to_json(rec.original_key);
  return out;
}

FamilyRecord family_from_json(const json& j) {
  FamilyRecord rec;
  rec.key = key_from_json(j);
  rec.tau = poly_from_json(j.at("tau"));
  for (const auto& p : j.at("polys")) {
    rec.polys.push_back({p.at("i").get<std::size_t>(), p.at("degree").get<std::size_t>(),
                         poly_from_json(p.at("coeffs"))});
  }
  for (const auto& n : j.at("norms")) rec.norms.push_back(rat_from_json(n));
  rec.admissible = j.value("admissible", false);
  rec.original_key = j.contains("original_key") ? key_from_json(j.at("original_key")) : rec.key;
  return rec;
}

json report_entry(const std::string& identity, const FamilyKey& key, std::optional<std::size_t> i,
                  bool pass, const std::optional<Poly>& counterexample_probe,
                  const std::optional<std::string>& kind) {
  json e;
  if (kind) e["kind"] = *kind;
  e["identity"] = identity;
  e["key"] = to_json(key);
  e["i"] = i ? json(*i) : json(nullptr);
  e["pass"] = pass;
  e["counterexample_probe"] = counterexample_probe ? to_json(*counterexample_probe) : json(nullptr);
  return e;
}

}  // namespace xleg::io
