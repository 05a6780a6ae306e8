#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cardmetric/element.hpp"
#include "cardmetric/error.hpp"

namespace cardmetric {

/// Parses a product of disjoint cycles over 1-based points, e.g. "(1 2)(3 4 5)".
/// Points inside a cycle are separated by whitespace or commas. "e" and "()"
/// denote the identity. A point may appear at most once in the whole
/// expression.
inline Permutation parse_cycle_notation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error("permutation degree must be at least 1");

  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::size_t last = text.size();
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  if (text.substr(first, last - first) == "e") return Permutation(degree);
  if (first == last) throw ParseError("empty permutation expression", first);

  std::vector<Permutation::point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Permutation::point_type>(i);
  std::vector<bool> used(degree, false);

  bool open = false;
  std::size_t open_pos = 0;
  std::vector<std::size_t> cycle;
  auto close_cycle = [&] {
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Permutation::point_type>(cycle[i + 1]);
    if (cycle.size() > 1) images[cycle.back()] = static_cast<Permutation::point_type>(cycle.front());
    cycle.clear();
  };

  std::size_t pos = first;
  while (pos < last) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || (c == ',' && open)) {
      ++pos;
    } else if (c == '(') {
      if (open) throw ParseError("malformed parentheses: nested '('", pos);
      open = true;
      open_pos = pos++;
    } else if (c == ')') {
      if (!open) throw ParseError("malformed parentheses: unmatched ')'", pos);
      open = false;
      close_cycle();
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw ParseError("malformed parentheses: point outside a cycle", pos);
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < last && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) value = degree + 1;  // saturate; reported below
        ++pos;
      }
      if (value < 1 || value > degree)
        throw ParseError("point " + std::string(text.substr(start, pos - start)) +
                             " out of range 1.." + std::to_string(degree),
                         start);
      if (used[value - 1])
        throw ParseError("repeated point " + std::to_string(value), start);
      used[value - 1] = true;
      cycle.push_back(value - 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  if (open) throw ParseError("malformed parentheses: unclosed '('", open_pos);
  return Permutation(std::move(images));
}

/// Canonical cycle notation: 1-based points, each cycle starting at its
/// smallest point, cycles ordered by that point, fixed points omitted, "e"
/// for the identity.
inline std::string format_permutation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (x != start) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

inline std::string format_vector(const LatticeVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + "]";
}

inline std::string format_element(const Element& e) {
  return e.is_permutation() ? format_permutation(e.permutation()) : format_vector(e.vector());
}

}  // namespace cardmetric
