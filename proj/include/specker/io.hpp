#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "specker/duality.hpp"
#include "specker/limits.hpp"
#include "specker/mv.hpp"
#include "specker/omega.hpp"
#include "specker/sgroup.hpp"

// JSON forms of every value type. Readers are strict: unknown keys, wrong
// types and missing fields raise structure_error; mathematical violations
// (divisibility, unit preservation) surface as the library's domain_error.
namespace specker::io {

using json = nlohmann::json;

namespace detail {

inline void require_object(const json& j, std::initializer_list<const char*> keys, const std::string& what) {
  if (!j.is_object()) throw structure_error(what + ": expected a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw structure_error(what + ": unknown field '" + k + "'");
  }
  for (const char* key : keys)
    if (!j.contains(key)) throw structure_error(what + ": missing field '" + std::string(key) + "'");
}

inline const json& array_field(const json& j, const char* key, const std::string& what) {
  const auto& a = j.at(key);
  if (!a.is_array()) throw structure_error(what + ": field '" + std::string(key) + "' must be an array");
  return a;
}

inline std::int64_t integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw structure_error(what + ": expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw overflow_error(what + ": integer exceeds 64-bit range");
  return j.get<std::int64_t>();
}

inline std::string string(const json& j, const std::string& what) {
  if (!j.is_string()) throw structure_error(what + ": expected a string");
  return j.get<std::string>();
}

inline std::size_t index(const json& j, const std::string& what) {
  const auto v = integer(j, what);
  if (v < 0) throw structure_error(what + ": expected a nonnegative index");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multispaces and morphisms

inline json to_json(const MultiSpace& x) {
  json pts = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) pts.push_back({{"label", x.label(i)}, {"mult", x.mult(i)}});
  return {{"points", pts}};
}

inline MultiSpace space_from_json(const json& j) {
  detail::require_object(j, {"points"}, "space");
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  for (const auto& p : detail::array_field(j, "points", "space")) {
    detail::require_object(p, {"label", "mult"}, "space point");
    labels.push_back(detail::string(p.at("label"), "point label"));
    if (p.at("mult").is_number_unsigned()) {
      const auto m = p.at("mult").get<std::uint64_t>();
      if (m == 0) throw structure_error("multiplicity of point '" + labels.back() + "' must be positive");
      mults.push_back(m);
    } else {
      const auto m = detail::integer(p.at("mult"), "multiplicity of point '" + labels.back() + "'");
      if (m <= 0) throw structure_error("multiplicity of point '" + labels.back() + "' must be positive");
      mults.push_back(static_cast<std::uint64_t>(m));
    }
  }
  return MultiSpace(std::move(labels), std::move(mults));
}

inline json map_json(const BmsMorphism& m) {
  json map = json::object();
  for (std::size_t i = 0; i < m.dom().size(); ++i) map[m.dom().label(i)] = m.cod().label(m.image(i));
  return map;
}

inline json to_json(const BmsMorphism& m) { return {{"dom", to_json(m.dom())}, {"cod", to_json(m.cod())}, {"map", map_json(m)}}; }

inline BmsMorphism morphism_from_map(const MultiSpace& dom, const MultiSpace& cod, const json& map) {
  if (!map.is_object()) throw structure_error("morphism map must be an object");
  std::map<std::string, std::string> gamma;
  for (const auto& [k, v] : map.items()) {
    if (!dom.find(k)) throw structure_error("morphism map names unknown domain point '" + k + "'");
    gamma[k] = detail::string(v, "image of '" + k + "'");
  }
  return new_morphism(dom, cod, gamma);
}

inline BmsMorphism morphism_from_json(const json& j) {
  detail::require_object(j, {"dom", "cod", "map"}, "morphism");
  return morphism_from_map(space_from_json(j.at("dom")), space_from_json(j.at("cod")), j.at("map"));
}

// ---------------------------------------------------------------------------
// Groups, elements, homomorphisms

inline json to_json(const SpeckerGroup& g) { return {{"space", to_json(g.base())}}; }

/// {"space": ...}; a bare space is accepted as shorthand.
inline SpeckerGroup group_from_json(const json& j) {
  if (j.is_object() && j.contains("points")) return SpeckerGroup(space_from_json(j));
  detail::require_object(j, {"space"}, "group");
  return SpeckerGroup(space_from_json(j.at("space")));
}

inline json values_json(const GroupElement& e) { return json(std::vector<std::int64_t>(e.values().begin(), e.values().end())); }

inline json to_json(const GroupElement& e) { return {{"group", to_json(e.group())}, {"values", values_json(e)}}; }

inline GroupElement element_from_json(const json& j) {
  detail::require_object(j, {"group", "values"}, "element");
  std::vector<std::int64_t> values;
  for (const auto& v : detail::array_field(j, "values", "element")) values.push_back(detail::integer(v, "element value"));
  return GroupElement(group_from_json(j.at("group")), std::move(values));
}

inline json to_json(const IntMatrix& m) { return json(m.to_rows()); }

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw structure_error("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw structure_error("matrix row must be an array");
    auto& r = rows.emplace_back();
    for (const auto& v : row) r.push_back(detail::integer(v, "matrix entry"));
  }
  return IntMatrix::from_rows(rows);
}

inline json to_json(const LHom& h) {
  return {{"dom", to_json(h.dom())}, {"cod", to_json(h.cod())}, {"matrix", to_json(h.matrix())}};
}

/// An empty row list stands for the 0 x n matrix of a homomorphism into the
/// trivial group, so the column count is taken from the domain.
inline LHom lhom_from_json(const json& j) {
  detail::require_object(j, {"dom", "cod", "matrix"}, "homomorphism");
  const auto dom = group_from_json(j.at("dom"));
  const auto cod = group_from_json(j.at("cod"));
  auto m = matrix_from_json(j.at("matrix"));
  if (m.rows() == 0) m = IntMatrix(0, dom.dimension());
  return LHom(dom, cod, std::move(m));
}

// ---------------------------------------------------------------------------
// Diagrams, cones, cocones

inline json to_json(const Diagram& d) {
  json objs = json::array();
  for (const auto& o : d.objects()) objs.push_back(to_json(o));
  json arrows = json::array();
  for (const auto& a : d.arrows()) arrows.push_back({{"source", a.source}, {"target", a.target}, {"map", map_json(a.morphism)}});
  return {{"objects", objs}, {"arrows", arrows}};
}

inline Diagram diagram_from_json(const json& j) {
  detail::require_object(j, {"objects", "arrows"}, "diagram");
  std::vector<MultiSpace> objs;
  for (const auto& o : detail::array_field(j, "objects", "diagram")) objs.push_back(space_from_json(o));
  std::vector<Arrow> arrows;
  for (const auto& a : detail::array_field(j, "arrows", "diagram")) {
    detail::require_object(a, {"source", "target", "map"}, "diagram arrow");
    const auto s = detail::index(a.at("source"), "arrow source");
    const auto t = detail::index(a.at("target"), "arrow target");
    if (s >= objs.size() || t >= objs.size()) throw structure_error("diagram arrow refers to a missing object");
    arrows.push_back(Arrow{s, t, morphism_from_map(objs[s], objs[t], a.at("map"))});
  }
  return Diagram(std::move(objs), std::move(arrows));
}

inline json to_json(const Cone& c) {
  json legs = json::array();
  for (const auto& l : c.legs) legs.push_back(to_json(l));
  return {{"apex", to_json(c.apex)}, {"legs", legs}};
}

inline json to_json(const Cocone& c) {
  json legs = json::array();
  for (const auto& l : c.legs) legs.push_back(to_json(l));
  return {{"apex", to_json(c.apex)}, {"legs", legs}};
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const HomBijectionReport& r) {
  return {{"homs_bms", r.homs_bms}, {"homs_uslg", r.homs_uslg}, {"bijection", r.bijection}, {"failures", r.failures}};
}

inline json to_json(const UniversalReport& r) {
  return {{"apexes", r.apexes},
          {"cones", r.cones},
          {"existence_failures", r.existence_failures},
          {"uniqueness_failures", r.uniqueness_failures},
          {"violations", r.violations},
          {"ok", r.ok()}};
}

inline json to_json(const FiberComponent& f, const MultiSpace& base) {
  json pts = json::array();
  for (auto p : f.points) pts.push_back(base.label(p));
  return {{"points", pts}, {"n", f.n}};
}

inline json to_json(const omega::ECSeq& s) { return {{"prefix", s.prefix()}, {"tail", s.tail()}}; }

inline omega::ECSeq ecseq_from_json(const json& j) {
  detail::require_object(j, {"prefix", "tail"}, "sequence");
  std::vector<std::int64_t> prefix;
  for (const auto& v : detail::array_field(j, "prefix", "sequence")) prefix.push_back(detail::integer(v, "sequence value"));
  return omega::ECSeq(std::move(prefix), detail::integer(j.at("tail"), "sequence tail"));
}

inline json to_json(const omega::MembershipCertificate& c) {
  return {{"functional", c.functional},
          {"modulus", c.modulus},
          {"target_value", c.target_value},
          {"generator_values", c.generator_values},
          {"tail_only", c.tail_only()}};
}

inline json to_json(const omega::NotSpeckerReport& r) {
  json j = {{"closed", r.closed ? "pass" : "fail"},
            {"closure_samples", r.closure_samples},
            {"singulars_checked", r.singulars_checked},
            {"singulars_found", r.singulars_found},
            {"singulars_finite_support", r.singulars_finite_support ? "pass" : "fail"},
            {"unit_generated", r.unit_generated},
            {"unit_generated_in_full_group", r.unit_generated_in_full_group},
            {"failures", r.failures}};
  if (r.certificate) {
    j["certificate"] = to_json(*r.certificate);
    j["certificate"]["valid"] = r.certificate_valid;
  }
  return j;
}

inline json to_json(const omega::PowerReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"k", row.k}, {"point", to_json(row.point)}, {"v", row.lcm}});
  return {{"points", rows}, {"limit", {{"point", to_json(r.limit_point)}, {"v", r.limit_lcm}}}, {"all_b_v", r.all_b_lcm}};
}

inline json to_json(const omega::PushoutReport& r) {
  json table = json::object();
  table["inf"] = r.forced_at_infinity;
  for (std::size_t n = 0; n < r.forced.size(); ++n) table[std::to_string(n)] = r.forced[n];
  return {{"bound", r.bound},
          {"forced", table},
          {"min_prefix_len", r.min_prefix_len},
          {"comparison_legs_valid", r.comparison_legs_valid},
          {"representable", r.representable},
          {"failures", r.failures}};
}

}  // namespace specker::io
