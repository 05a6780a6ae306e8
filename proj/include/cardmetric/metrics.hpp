#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cardmetric/element.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/integer_matrix.hpp"
#include "cardmetric/rational.hpp"

namespace cardmetric {

enum class MetricKind { word, cardinal };

inline std::string_view to_string(MetricKind k) {
  return k == MetricKind::word ? "word" : "cardinal";
}

inline MetricKind parse_metric_kind(std::string_view s) {
  if (s == "word") return MetricKind::word;
  if (s == "cardinal") return MetricKind::cardinal;
  throw Error("unknown metric '" + std::string(s) + "' (expected word or cardinal)");
}

inline constexpr std::size_t default_radius_cap = 1024;

/// Calls `visit(indices)` for every k-subset of {0..n-1} in lexicographic
/// order. Stops early and returns true when `visit` returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(std::as_const(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Memoizing evaluator of ‖g‖ = min{|A| : A ⊆ S, g ∈ ⟨A⟩}.
///
/// Subsets are tried by increasing size, lexicographically by generator
/// index within a size; subgroup data is cached per subset bitmask. Not
/// safe for concurrent use; create one per thread.
class CardinalNorms {
 public:
  explicit CardinalNorms(const GeneratedGroup& G) : G_(&G) {
    if (G.generator_count() >= 64)
      throw BoundExceeded("cardinal norm subset enumeration", G.generator_count(), 63);
  }

  std::size_t operator()(const Element& g) {
    G_->require_member(g);
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    const std::size_t m = G_->generator_count();
    std::size_t found = npos;
    for (std::size_t k = 0; k <= m && found == npos; ++k) {
      bool hit = for_each_combination(m, k, [&](const std::vector<std::size_t>& subset) {
        std::uint64_t mask = 0;
        for (auto i : subset) mask |= std::uint64_t{1} << i;
        return in_subgroup(mask, g);
      });
      if (hit) found = k;
    }
    if (found == npos) throw Error("element not generated by S");  // unreachable when S generates G
    memo_.emplace(g, found);
    return found;
  }

 private:
  bool in_subgroup(std::uint64_t mask, const Element& g) {
    if (G_->is_finite()) return closure_of(mask)[G_->index_of(g)] != 0;
    auto it = forms_.find(mask);
    if (it == forms_.end()) {
      std::vector<LatticeVector> cols;
      for (std::size_t i = 0; i < G_->generator_count(); ++i)
        if (mask >> i & 1) cols.push_back(G_->generators()[i].vector());
      it = forms_
               .emplace(mask, hermite_normal_form(
                                  IntegerMatrix::from_columns(G_->dimension(), cols)))
               .first;
    }
    return hermite_contains(it->second, g.vector());
  }

  const std::vector<char>& closure_of(std::uint64_t mask) {
    if (auto it = closures_.find(mask); it != closures_.end()) return it->second;
    std::vector<char> seen(G_->order(), 0);
    seen[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < G_->generator_count(); ++i) {
        if (!(mask >> i & 1)) continue;
        for (auto next : {G_->right_multiply(cur, i), G_->right_multiply_inverse(cur, i)}) {
          if (!seen[next]) {
            seen[next] = 1;
            queue.push_back(next);
          }
        }
      }
    }
    return closures_.emplace(mask, std::move(seen)).first->second;
  }

  const GeneratedGroup* G_;
  std::unordered_map<std::uint64_t, std::vector<char>> closures_;
  std::unordered_map<std::uint64_t, HermiteForm> forms_;
  std::unordered_map<Element, std::size_t> memo_;
};

/// Word norm evaluator: BFS from the identity over S ∪ S^-1, grown lazily
/// one layer at a time up to `radius_cap`. Not safe for concurrent use.
class WordNorms {
 public:
  WordNorms(const GeneratedGroup& G, std::size_t radius_cap)
      : G_(&G), cap_(radius_cap), frontier_{G.identity()} {
    for (const auto& s : G.generators()) steps_.push_back(s);
    for (const auto& s : G.generators()) steps_.push_back(invert(s));
    dist_.emplace(G.identity(), 0);
  }

  std::size_t operator()(const Element& g) {
    G_->require_member(g);
    for (;;) {
      if (auto it = dist_.find(g); it != dist_.end()) return it->second;
      if (radius_ >= cap_ || frontier_.empty()) throw RadiusCapExceeded(cap_);
      grow();
    }
  }

 private:
  void grow() {
    std::vector<Element> next;
    for (const auto& x : frontier_)
      for (const auto& s : steps_) {
        auto y = multiply(x, s);
        if (dist_.emplace(y, radius_ + 1).second) next.push_back(std::move(y));
      }
    frontier_ = std::move(next);
    ++radius_;
  }

  const GeneratedGroup* G_;
  std::size_t cap_;
  std::size_t radius_ = 0;
  std::vector<Element> steps_;
  std::vector<Element> frontier_;
  std::unordered_map<Element, std::size_t> dist_;
};

/// Left-invariant distance d(g, h) = ‖g^-1 h‖ for either metric.
class DistanceOracle {
 public:
  DistanceOracle(const GeneratedGroup& G, MetricKind kind,
                 std::size_t radius_cap = default_radius_cap)
      : G_(&G), kind_(kind), word_(G, radius_cap) {
    if (kind == MetricKind::cardinal) cardinal_.emplace(G);
  }

  MetricKind kind() const { return kind_; }

  std::size_t norm(const Element& g) {
    return kind_ == MetricKind::cardinal ? (*cardinal_)(g) : word_(g);
  }

  std::size_t distance(const Element& g, const Element& h) {
    return norm(compose(*G_, inverse(*G_, g), h));
  }

 private:
  const GeneratedGroup* G_;
  MetricKind kind_;
  std::optional<CardinalNorms> cardinal_;
  WordNorms word_;
};

inline std::size_t cardinal_norm(const GeneratedGroup& G, const Element& g) {
  return CardinalNorms(G)(g);
}

inline std::size_t cardinal_distance(const GeneratedGroup& G, const Element& g,
                                     const Element& h) {
  return cardinal_norm(G, compose(G, inverse(G, g), h));
}

inline std::size_t word_norm(const GeneratedGroup& G, const Element& g,
                             std::size_t radius_cap = default_radius_cap) {
  return WordNorms(G, radius_cap)(g);
}

inline std::size_t word_distance(const GeneratedGroup& G, const Element& g, const Element& h,
                                 std::size_t radius_cap = default_radius_cap) {
  return word_norm(G, compose(G, inverse(G, g), h), radius_cap);
}

/// Pairwise distances over an indexed vertex list, tagged with the metric
/// and the generating sequence that produced them.
class MetricTable {
 public:
  MetricTable() = default;
  MetricTable(std::vector<Element> vertices, MetricKind kind, std::vector<Element> generators,
              std::vector<std::size_t> entries)
      : vertices_(std::move(vertices)),
        kind_(kind),
        generators_(std::move(generators)),
        entries_(std::move(entries)) {
    if (entries_.size() != vertices_.size() * vertices_.size())
      throw DimensionMismatch("table entries do not form a square matrix over the vertices");
  }

  std::size_t size() const { return vertices_.size(); }
  MetricKind kind() const { return kind_; }
  const std::vector<Element>& vertices() const { return vertices_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::size_t>& entries() const { return entries_; }

  std::size_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size() + j];
  }

  std::size_t index_of(const Element& e) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), e);
    if (it == vertices_.end()) throw VertexNotFound("element is not a table vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Copy with d(i, j) = d(j, i) = value. Used for fault injection.
  MetricTable with_entry(std::size_t i, std::size_t j, std::size_t value) const {
    MetricTable out(*this);
    out.entries_[i * size() + j] = value;
    out.entries_[j * size() + i] = value;
    return out;
  }

  friend bool operator==(const MetricTable&, const MetricTable&) = default;

 private:
  std::vector<Element> vertices_;
  MetricKind kind_ = MetricKind::word;
  std::vector<Element> generators_;
  std::vector<std::size_t> entries_;
};

inline MetricTable metric_table(const GeneratedGroup& G, std::span<const Element> vertices,
                                MetricKind kind, std::size_t radius_cap = default_radius_cap) {
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    G.require_member(vertices[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (vertices[j] == vertices[i]) throw Error("table vertices must be distinct");
  }
  DistanceOracle oracle(G, kind, radius_cap);
  std::vector<Element> inverses;
  for (const auto& v : vertices) inverses.push_back(invert(v));
  std::vector<std::size_t> entries(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      entries[i * n + j] = entries[j * n + i] = oracle.norm(multiply(inverses[i], vertices[j]));
  return MetricTable({vertices.begin(), vertices.end()}, kind,
                     {G.generators().begin(), G.generators().end()}, std::move(entries));
}

/// Table over all of a finite G, vertices in G.elements() order.
inline MetricTable metric_table(const GeneratedGroup& G, MetricKind kind,
                                std::size_t radius_cap = default_radius_cap) {
  return metric_table(G, G.elements(), kind, radius_cap);
}

inline std::size_t diameter(const MetricTable& t) {
  if (t.size() == 0) throw Error("diameter of an empty table");
  return *std::max_element(t.entries().begin(), t.entries().end());
}

struct BallSpec {
  Element center;
  Rational radius;
  MetricKind kind = MetricKind::cardinal;
};

/// Open ball {y ∈ universe : d(center, y) < radius}, in universe order.
inline std::vector<Element> ball(const GeneratedGroup& G, const BallSpec& spec,
                                 std::span<const Element> universe,
                                 std::size_t radius_cap = default_radius_cap) {
  if (spec.radius < 0) throw Error("ball radius must be nonnegative");
  if (std::find(universe.begin(), universe.end(), spec.center) == universe.end())
    throw VertexNotFound("ball center is not in the universe");
  DistanceOracle oracle(G, spec.kind, radius_cap);
  std::vector<Element> out;
  for (const auto& y : universe)
    if (Rational(static_cast<std::int64_t>(oracle.distance(spec.center, y))) < spec.radius)
      out.push_back(y);
  return out;
}

}  // namespace cardmetric
