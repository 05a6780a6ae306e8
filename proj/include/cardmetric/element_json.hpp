#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cardmetric/element.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/notation.hpp"

namespace cardmetric {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers; larger ones become
/// decimal strings.
inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    try {
      return Integer(s);
    } catch (const std::exception&) {
      throw SchemaError("malformed integer string '" + s + "'");
    }
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

/// Permutations as canonical cycle strings, vectors as integer arrays.
inline Json element_to_json(const Element& e) {
  if (e.is_permutation()) return format_permutation(e.permutation());
  Json arr = Json::array();
  for (const auto& c : e.vector().coords()) arr.push_back(integer_to_json(c));
  return arr;
}

inline Element element_from_json(const Json& j, Backend backend, std::size_t dimension) {
  if (backend == Backend::permutation) {
    if (!j.is_string()) throw SchemaError("permutation must be a cycle-notation string");
    return parse_cycle_notation(j.get_ref<const std::string&>(), dimension);
  }
  if (j.is_number_integer() && dimension == 1) return LatticeVector(std::vector<Integer>{integer_from_json(j)});
  if (!j.is_array()) throw SchemaError("lattice vector must be an integer array");
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(integer_from_json(c));
  if (coords.size() != dimension)
    throw SchemaError("lattice vector has length " + std::to_string(coords.size()) +
                      ", expected rank " + std::to_string(dimension));
  return LatticeVector(std::move(coords));
}

inline std::string backend_name(Backend b) {
  return b == Backend::permutation ? "permutation" : "free_abelian";
}

}  // namespace cardmetric
