#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cardmetric/element.hpp"
#include "cardmetric/element_json.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/notation.hpp"

namespace cardmetric {

/// Arc tail -> head coloured by generator index: head = tail * S[color].
struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::size_t color = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Truncation {
  Element center;
  std::size_t radius = 0;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Right Cayley colour digraph, possibly restricted to a word ball.
class ColorDigraph {
 public:
  /// Checks every index and every arc relation head = tail * S[color].
  ColorDigraph(std::vector<Element> vertices, std::vector<Element> generators,
               std::vector<Arc> arcs, std::optional<Truncation> truncation = std::nullopt)
      : vertices_(std::move(vertices)),
        generators_(std::move(generators)),
        arcs_(std::move(arcs)),
        truncation_(std::move(truncation)),
        heads_(vertices_.size() * generators_.size(), npos) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (!index_.emplace(vertices_[i], i).second)
        throw Error("duplicate digraph vertex " + format_element(vertices_[i]));
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
      const auto& a = arcs_[k];
      if (a.tail >= vertices_.size() || a.head >= vertices_.size() ||
          a.color >= generators_.size())
        throw Error("arc " + std::to_string(k) + " has an index out of range");
      if (multiply(vertices_[a.tail], generators_[a.color]) != vertices_[a.head])
        throw Error("arc " + std::to_string(k) + " violates head = tail * S[color]");
      heads_[a.tail * generators_.size() + a.color] = a.head;
      colors_.emplace(key(a.tail, a.head), a.color);
    }
  }

  const std::vector<Element>& vertices() const { return vertices_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::optional<Truncation>& truncation() const { return truncation_; }
  bool is_truncated() const { return truncation_.has_value(); }
  std::size_t size() const { return vertices_.size(); }
  std::size_t color_count() const { return generators_.size(); }

  std::optional<std::size_t> find_vertex(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t vertex_index(const Element& e) const {
    if (auto i = find_vertex(e)) return *i;
    throw VertexNotFound("element " + format_element(e) + " is not a digraph vertex");
  }

  /// Colour of the arc u -> v, if present.
  std::optional<std::size_t> color_of(std::size_t u, std::size_t v) const {
    auto it = colors_.find(key(u, v));
    if (it == colors_.end()) return std::nullopt;
    return it->second;
  }

  /// Head of the colour-c arc out of u, or npos.
  std::size_t head(std::size_t u, std::size_t c) const {
    return heads_[u * generators_.size() + c];
  }

  friend bool operator==(const ColorDigraph& a, const ColorDigraph& b) {
    return a.vertices_ == b.vertices_ && a.generators_ == b.generators_ &&
           a.arcs_ == b.arcs_ && a.truncation_ == b.truncation_;
  }

 private:
  static std::uint64_t key(std::size_t u, std::size_t v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
  }

  std::vector<Element> vertices_;
  std::vector<Element> generators_;
  std::vector<Arc> arcs_;
  std::optional<Truncation> truncation_;
  std::unordered_map<Element, std::size_t> index_;
  std::vector<std::size_t> heads_;
  std::unordered_map<std::uint64_t, std::size_t> colors_;
};

struct TruncationRequest {
  Element center;
  std::size_t radius = 0;
  std::size_t radius_cap = default_radius_cap;
};

/// Arcs {(g, g*s)} over all of a finite G, or over the word ball described
/// by `truncation`. Vertices are in G.elements() order (untruncated) or BFS
/// order from the centre; arcs are listed by tail, then colour.
inline ColorDigraph build_color_digraph(const GeneratedGroup& G,
                                        const std::optional<TruncationRequest>& truncation = {}) {
  if (G.generator_count() == 0)
    throw InvalidGenerators("colour digraph needs a nonempty generating set");
  std::vector<Element> gens(G.generators().begin(), G.generators().end());

  if (!truncation) {
    if (!G.is_finite())
      throw InfiniteEnumeration("colour digraph of an infinite group needs a truncation");
    std::vector<Arc> arcs;
    arcs.reserve(G.order() * gens.size());
    for (std::size_t g = 0; g < G.order(); ++g)
      for (std::size_t c = 0; c < gens.size(); ++c) arcs.push_back({g, G.right_multiply(g, c), c});
    return ColorDigraph(G.elements(), std::move(gens), std::move(arcs));
  }

  if (truncation->radius > truncation->radius_cap) throw RadiusCapExceeded(truncation->radius_cap);
  auto vertices = word_ball(G, truncation->center, truncation->radius);
  std::unordered_map<Element, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Arc> arcs;
  for (std::size_t g = 0; g < vertices.size(); ++g)
    for (std::size_t c = 0; c < gens.size(); ++c)
      if (auto it = index.find(multiply(vertices[g], gens[c])); it != index.end())
        arcs.push_back({g, it->second, c});
  return ColorDigraph(std::move(vertices), std::move(gens), std::move(arcs),
                      Truncation{truncation->center, truncation->radius});
}

/// Edges {u, v} (u < v) of the underlying undirected graph, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> underlying_edges(const ColorDigraph& d) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : d.arcs())
    edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

struct ColorConnectivity {
  std::size_t colors = 0;
  /// Set for truncated digraphs: paths leaving the ball are not seen, so
  /// the count can only overestimate the distance in the full group.
  bool upper_bound_only = false;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Fewest colours C such that g and h are joined by a path using only
/// C-coloured arcs, traversed in either direction. Purely graph-theoretic:
/// colour subsets by increasing size, components by union-find.
///
/// Truncated digraphs are refused unless `allow_truncated` is set.
inline ColorConnectivity min_color_connectivity(const ColorDigraph& d, std::size_t g,
                                                std::size_t h, bool allow_truncated = false) {
  if (g >= d.size() || h >= d.size()) throw VertexNotFound("vertex index out of range");
  if (d.is_truncated() && !allow_truncated)
    throw Error("colour connectivity on a truncated digraph is only an upper bound; "
                "pass allow_truncated to accept that");
  ColorConnectivity out{0, d.is_truncated()};
  if (g == h) return out;
  const std::size_t m = d.color_count();
  for (std::size_t k = 1; k <= m; ++k) {
    bool joined = for_each_combination(m, k, [&](const std::vector<std::size_t>& subset) {
      std::vector<bool> keep(m, false);
      for (auto c : subset) keep[c] = true;
      detail::DisjointSets sets(d.size());
      for (const auto& a : d.arcs())
        if (keep[a.color]) sets.unite(a.tail, a.head);
      return sets.find(g) == sets.find(h);
    });
    if (joined) {
      out.colors = k;
      return out;
    }
  }
  throw Error("vertices are not connected in the digraph");
}

inline ColorConnectivity min_color_connectivity(const ColorDigraph& d, const Element& g,
                                                const Element& h, bool allow_truncated = false) {
  return min_color_connectivity(d, d.vertex_index(g), d.vertex_index(h), allow_truncated);
}

inline constexpr std::array<std::string_view, 12> color_palette = {
    "red",    "blue",    "green", "orange", "purple", "brown",
    "magenta", "cyan",   "gold",  "gray",   "navy",   "darkgreen"};

/// DOT digraph. One node line per vertex, one edge line per arc, colours
/// cycled from a fixed 12-entry palette by generator index.
inline std::string export_dot(const ColorDigraph& d) {
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (std::size_t c = 0; c < d.color_count(); ++c)
    os << "  // color " << c << " = " << color_palette[c % color_palette.size()] << ": "
       << format_element(d.generators()[c]) << "\n";
  for (std::size_t v = 0; v < d.size(); ++v)
    os << "  v" << v << " [label=\"" << format_element(d.vertices()[v]) << "\"];\n";
  for (const auto& a : d.arcs())
    os << "  v" << a.tail << " -> v" << a.head << " [color=\""
       << color_palette[a.color % color_palette.size()] << "\"];\n";
  os << "}\n";
  return os.str();
}

inline Json digraph_to_json(const ColorDigraph& d) {
  Json j;
  Backend backend = d.vertices().empty() ? Backend::permutation : d.vertices().front().backend();
  std::size_t dim = d.vertices().empty() ? 0 : d.vertices().front().dimension();
  j["type"] = backend_name(backend);
  j[backend == Backend::permutation ? "degree" : "rank"] = dim;
  j["vertices"] = Json::array();
  for (const auto& v : d.vertices()) j["vertices"].push_back(element_to_json(v));
  j["arcs"] = Json::array();
  for (const auto& a : d.arcs()) j["arcs"].push_back(Json::array({a.tail, a.head, a.color}));
  j["generators"] = Json::array();
  for (const auto& s : d.generators()) j["generators"].push_back(element_to_json(s));
  if (d.truncation()) {
    j["truncation"] = {{"center", element_to_json(d.truncation()->center)},
                       {"radius", d.truncation()->radius}};
  } else {
    j["truncation"] = nullptr;
  }
  return j;
}

/// {"vertices": [...], "arcs": [[tail, head, color], ...], "generators": [...]}
/// plus the backend header needed to read it back.
inline std::string export_json(const ColorDigraph& d) { return digraph_to_json(d).dump(2) + "\n"; }

inline ColorDigraph parse_digraph_json(const Json& j) {
  try {
    auto type = j.at("type").get<std::string>();
    Backend backend;
    std::size_t dim;
    if (type == "permutation") {
      backend = Backend::permutation;
      dim = j.at("degree").get<std::size_t>();
    } else if (type == "free_abelian") {
      backend = Backend::free_abelian;
      dim = j.at("rank").get<std::size_t>();
    } else {
      throw SchemaError("unknown digraph type '" + type + "'");
    }
    std::vector<Element> vertices, gens;
    for (const auto& v : j.at("vertices")) vertices.push_back(element_from_json(v, backend, dim));
    for (const auto& s : j.at("generators")) gens.push_back(element_from_json(s, backend, dim));
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 3) throw SchemaError("arc must be [tail, head, color]");
      arcs.push_back({a[0].get<std::size_t>(), a[1].get<std::size_t>(), a[2].get<std::size_t>()});
    }
    std::optional<Truncation> trunc;
    if (auto it = j.find("truncation"); it != j.end() && !it->is_null())
      trunc = Truncation{element_from_json(it->at("center"), backend, dim),
                         it->at("radius").get<std::size_t>()};
    return ColorDigraph(std::move(vertices), std::move(gens), std::move(arcs), std::move(trunc));
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed digraph document: ") + e.what());
  }
}

inline ColorDigraph parse_digraph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return parse_digraph_json(j);
}

inline ColorDigraph parse_digraph_json(const std::string& text) {
  return parse_digraph_json(std::string_view(text));
}

inline ColorDigraph parse_digraph_json(const char* text) {
  return parse_digraph_json(std::string_view(text));
}

}  // namespace cardmetric
