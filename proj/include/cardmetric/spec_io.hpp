#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardmetric/element_json.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/geometry.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/group_map.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/notation.hpp"
#include "cardmetric/verification.hpp"

namespace cardmetric {

/// Decoded group document:
///
///   {"type": "permutation", "degree": 3, "generators": ["(1 2)", "(1 2 3)"]}
///   {"type": "free_abelian", "rank": 2, "generators": [[1, 0], [0, 1]]}
///
/// Optional keys: "labels" (one string per generator), "order" (expected
/// |G| for permutation groups), "ball_radius" (default truncation).
struct GroupSpec {
  Backend backend = Backend::permutation;
  std::size_t dimension = 0;
  std::vector<Element> generators;
  std::vector<std::string> labels;
  std::optional<std::size_t> order;
  std::optional<std::size_t> ball_radius;
};

inline GroupSpec read_group_spec(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("group spec must be a JSON object");
  auto field = [&](const char* key) -> const Json& {
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(std::string("group spec is missing \"") + key + "\"");
    return *it;
  };
  auto count = [&](const char* key) -> std::size_t {
    const auto& v = field(key);
    if (!v.is_number_unsigned()) throw SchemaError(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
  };

  GroupSpec spec;
  const auto& type = field("type");
  if (type == "permutation") {
    spec.backend = Backend::permutation;
    spec.dimension = count("degree");
    if (spec.dimension == 0) throw SchemaError("\"degree\" must be at least 1");
  } else if (type == "free_abelian") {
    spec.backend = Backend::free_abelian;
    spec.dimension = count("rank");
  } else {
    throw SchemaError("\"type\" must be \"permutation\" or \"free_abelian\"");
  }

  const auto& gens = field("generators");
  if (!gens.is_array()) throw SchemaError("\"generators\" must be an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      spec.generators.push_back(element_from_json(gens[i], spec.backend, spec.dimension));
    } catch (const Error& e) {
      throw InvalidGenerators(e.what(), i);
    }
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != gens.size())
      throw SchemaError("\"labels\" must be an array with one string per generator");
    for (const auto& l : *it) {
      if (!l.is_string()) throw SchemaError("labels must be strings");
      spec.labels.push_back(l.get<std::string>());
    }
  }
  if (doc.contains("order")) spec.order = count("order");
  if (doc.contains("ball_radius")) spec.ball_radius = count("ball_radius");
  return spec;
}

inline GeneratedGroup build_group(const GroupSpec& spec) {
  GeneratedGroup G(spec.backend, spec.dimension, spec.generators);
  if (spec.order && G.is_finite() && G.order() != *spec.order)
    throw InvalidGenerators("set does not generate the declared group: |<S>| = " +
                            std::to_string(G.order()) + ", declared order " +
                            std::to_string(*spec.order));
  return G;
}

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

/// Parses and validates a group document; every GeneratedGroup invariant
/// is enforced.
inline GeneratedGroup parse_group_spec(std::string_view document) {
  return build_group(read_group_spec(parse_json_text(document)));
}

/// Reads an element given on the command line: cycle notation for
/// permutations; "[a,b,...]", "a,b,..." or (rank 1) "a" for vectors; "e"
/// for the identity in either backend.
inline Element parse_element_text(const GeneratedGroup& G, std::string_view text) {
  if (G.is_finite()) {
    Element e = parse_cycle_notation(text, G.dimension());
    G.require_member(e);
    return e;
  }
  std::string s(text);
  if (s == "e") return G.identity();
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  return element_from_json(parse_json_text(s), Backend::free_abelian, G.dimension());
}

inline Json table_to_json(const MetricTable& t) {
  Json j;
  j["metric"] = std::string(to_string(t.kind()));
  j["generators"] = Json::array();
  for (const auto& s : t.generators()) j["generators"].push_back(element_to_json(s));
  j["vertices"] = Json::array();
  for (const auto& v : t.vertices()) j["vertices"].push_back(element_to_json(v));
  j["distances"] = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) row.push_back(t(i, k));
    j["distances"].push_back(std::move(row));
  }
  return j;
}

inline Json comparison_to_json(const ComparisonReport& r) {
  Json j;
  j["best_constant"] = to_string(r.best_constant);
  j["K"] = to_string(r.K);
  j["c"] = to_string(r.c);
  j["from_diameter"] = r.from_diameter;
  j["to_diameter"] = r.to_diameter;
  j["holds"] = r.holds();
  j["violations"] = Json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"pair", {v.pair.first, v.pair.second}},
                               {"bound", v.bound == Violation::Bound::lower ? "lower" : "upper"},
                               {"lhs", to_string(v.lhs)},
                               {"rhs", to_string(v.rhs)}});
  return j;
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["all_passed"] = r.all_passed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json check{{"id", c.id}, {"passed", c.passed}, {"fixtures", Json::array()}};
    for (const auto& o : c.outcomes)
      check["fixtures"].push_back(
          {{"fixture", o.fixture}, {"status", std::string(to_string(o.status))}, {"detail", o.detail}});
    j["checks"].push_back(std::move(check));
  }
  return j;
}

inline Json map_to_json(const GroupMap& f) {
  Json j = Json::array();
  for (auto y : f.image) j.push_back(y);
  return j;
}

}  // namespace cardmetric
