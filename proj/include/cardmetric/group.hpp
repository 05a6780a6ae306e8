#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cardmetric/element.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/integer_matrix.hpp"

namespace cardmetric {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Upper limit on |⟨S⟩| for the permutation backend's cached enumeration.
inline constexpr std::size_t default_enumeration_limit = 1u << 20;

/// A group G together with an ordered, duplicate-free generating sequence S
/// that excludes the identity.
///
/// Permutation backend: G is ⟨S⟩ inside Sym(n). The full element list is
/// enumerated at construction in BFS order from the identity (neighbours
/// visited as s_0..s_{m-1}, then s_0^-1..s_{m-1}^-1), together with right
/// multiplication tables by every generator and its inverse.
///
/// Free abelian backend: G is ℤ^k and the lattice spanned by S must be all
/// of ℤ^k.
class GeneratedGroup {
 public:
  static GeneratedGroup permutation(std::size_t degree, std::vector<Permutation> gens,
                                    std::size_t enumeration_limit = default_enumeration_limit) {
    std::vector<Element> elems(gens.begin(), gens.end());
    return GeneratedGroup(Backend::permutation, degree, std::move(elems), enumeration_limit);
  }

  static GeneratedGroup free_abelian(std::size_t rank, std::vector<LatticeVector> gens) {
    std::vector<Element> elems(gens.begin(), gens.end());
    return GeneratedGroup(Backend::free_abelian, rank, std::move(elems), 0);
  }

  /// ℤ^k with its standard basis.
  static GeneratedGroup standard_lattice(std::size_t rank) {
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<Integer> c(rank);
      c[i] = 1;
      basis.emplace_back(std::move(c));
    }
    return free_abelian(rank, std::move(basis));
  }

  GeneratedGroup(Backend backend, std::size_t dimension, std::vector<Element> generators,
                 std::size_t enumeration_limit = default_enumeration_limit)
      : backend_(backend), dimension_(dimension), generators_(std::move(generators)) {
    validate_generators();
    if (backend_ == Backend::permutation) {
      enumerate(enumeration_limit);
    } else {
      std::vector<LatticeVector> cols;
      for (const auto& g : generators_) cols.push_back(g.vector());
      auto index = lattice_index(IntegerMatrix::from_columns(dimension_, cols));
      if (!index)
        throw InvalidGenerators("set does not generate Z^" + std::to_string(dimension_) +
                                ": spanned lattice has lower rank");
      if (*index != 1)
        throw InvalidGenerators("set does not generate Z^" + std::to_string(dimension_) +
                                ": lattice index " + index->str() + " != 1");
    }
  }

  Backend backend() const { return backend_; }
  bool is_finite() const { return backend_ == Backend::permutation; }
  /// Degree (permutation backend) or rank (free abelian backend).
  std::size_t dimension() const { return dimension_; }

  std::span<const Element> generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::optional<std::size_t> generator_index(const Element& e) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i] == e) return i;
    return std::nullopt;
  }

  Element identity() const {
    if (is_finite()) return Permutation(dimension_);
    return LatticeVector(dimension_);
  }

  /// True iff `e` has this group's backend and dimension (and, for the
  /// finite backend, lies in ⟨S⟩).
  bool contains(const Element& e) const {
    if (e.backend() != backend_ || e.dimension() != dimension_) return false;
    return !is_finite() || cache_->index.count(e.permutation()) > 0;
  }

  void require_member(const Element& e) const {
    if (e.backend() != backend_ || e.dimension() != dimension_)
      throw BackendMismatch("element does not match the group backend");
    if (is_finite() && cache_->index.count(e.permutation()) == 0)
      throw BackendMismatch("permutation is not an element of the group");
  }

  /// Finite backend: cached enumeration. Abelian backend: throws.
  const std::vector<Element>& elements() const {
    require_finite("element enumeration");
    return cache_->elements;
  }

  std::size_t order() const { return elements().size(); }

  /// Position of `e` in elements().
  std::size_t index_of(const Element& e) const {
    require_finite("element indexing");
    if (e.backend() == Backend::permutation) {
      auto it = cache_->index.find(e.permutation());
      if (it != cache_->index.end()) return it->second;
    }
    throw BackendMismatch("element is not in the group");
  }

  /// Index of elements()[g] * s_i.
  std::size_t right_multiply(std::size_t g, std::size_t i) const {
    return cache_->by_generator[g * generators_.size() + i];
  }
  /// Index of elements()[g] * s_i^-1.
  std::size_t right_multiply_inverse(std::size_t g, std::size_t i) const {
    return cache_->by_inverse[g * generators_.size() + i];
  }
  std::size_t inverse_index(std::size_t g) const { return cache_->inverses[g]; }
  std::size_t multiply_index(std::size_t a, std::size_t b) const {
    const auto& els = cache_->elements;
    return cache_->index.at(els[a].permutation().then(els[b].permutation()));
  }

  void require_finite(const char* what) const {
    if (!is_finite())
      throw InfiniteEnumeration(std::string(what) + " requires a finite backend (infinite enumeration)");
  }

 private:
  struct Enumeration {
    std::vector<Element> elements;
    std::unordered_map<Permutation, std::size_t> index;
    std::vector<std::size_t> by_generator;
    std::vector<std::size_t> by_inverse;
    std::vector<std::size_t> inverses;
  };

  void validate_generators() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.backend() != backend_)
        throw InvalidGenerators("generator backend does not match the group", i);
      if (g.dimension() != dimension_)
        throw InvalidGenerators("generator has dimension " + std::to_string(g.dimension()) +
                                    ", expected " + std::to_string(dimension_),
                                i);
      if (g.is_identity()) throw InvalidGenerators("identity generator forbidden", i);
      for (std::size_t j = 0; j < i; ++j)
        if (generators_[j] == g)
          throw InvalidGenerators("duplicate of generator " + std::to_string(j), i);
    }
  }

  void enumerate(std::size_t limit) {
    auto cache = std::make_shared<Enumeration>();
    std::vector<Permutation> steps;
    for (const auto& g : generators_) steps.push_back(g.permutation());
    for (const auto& g : generators_) steps.push_back(g.permutation().inverse());

    Permutation id(dimension_);
    cache->index.emplace(id, 0);
    cache->elements.emplace_back(id);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      auto cur = cache->elements[queue.front()].permutation();
      queue.pop_front();
      for (const auto& s : steps) {
        auto next = cur.then(s);
        if (cache->index.count(next)) continue;
        if (cache->elements.size() >= limit)
          throw BoundExceeded("group enumeration", cache->elements.size() + 1, limit);
        cache->index.emplace(next, cache->elements.size());
        queue.push_back(cache->elements.size());
        cache->elements.emplace_back(std::move(next));
      }
    }

    const std::size_t n = cache->elements.size();
    const std::size_t m = generators_.size();
    cache->by_generator.resize(n * m);
    cache->by_inverse.resize(n * m);
    cache->inverses.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
      const auto& p = cache->elements[g].permutation();
      for (std::size_t i = 0; i < m; ++i) {
        cache->by_generator[g * m + i] = cache->index.at(p.then(steps[i]));
        cache->by_inverse[g * m + i] = cache->index.at(p.then(steps[m + i]));
      }
      cache->inverses[g] = cache->index.at(p.inverse());
    }
    cache_ = std::move(cache);
  }

  Backend backend_;
  std::size_t dimension_;
  std::vector<Element> generators_;
  std::shared_ptr<const Enumeration> cache_;
};

/// a·b: permutations apply `a` first, then `b`; vectors add.
inline Element compose(const GeneratedGroup& G, const Element& a, const Element& b) {
  G.require_member(a);
  G.require_member(b);
  return multiply(a, b);
}

inline Element inverse(const GeneratedGroup& G, const Element& a) {
  G.require_member(a);
  return invert(a);
}

inline const std::vector<Element>& elements(const GeneratedGroup& G) { return G.elements(); }

/// ⟨A⟩ for a finite backend, as a list ordered by position in G.elements().
/// ⟨∅⟩ = {e}.
inline std::vector<Element> closure(const GeneratedGroup& G, std::span<const Element> A) {
  G.require_finite("closure");
  std::vector<std::size_t> steps;
  for (const auto& a : A) {
    steps.push_back(G.index_of(a));
    steps.push_back(G.inverse_index(steps.back()));
  }
  std::vector<char> seen(G.order(), 0);
  const std::size_t e = 0;
  seen[e] = 1;
  std::deque<std::size_t> queue{e};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto s : steps) {
      auto next = G.multiply_index(cur, s);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(G.elements()[i]);
  return out;
}

/// Decides g ∈ ⟨A⟩ for A ⊆ S.
inline bool subgroup_contains(const GeneratedGroup& G, std::span<const Element> A,
                              const Element& g) {
  G.require_member(g);
  for (const auto& a : A)
    if (!G.generator_index(a))
      throw Error("subset element is not one of the generators");
  if (G.is_finite()) {
    for (const auto& h : closure(G, A))
      if (h == g) return true;
    return false;
  }
  std::vector<LatticeVector> cols;
  for (const auto& a : A) cols.push_back(a.vector());
  return lattice_membership(IntegerMatrix::from_columns(G.dimension(), cols), g.vector());
}

/// Word ball of the given radius around `center` in the undirected Cayley
/// graph over S ∪ S^-1, in BFS order.
inline std::vector<Element> word_ball(const GeneratedGroup& G, const Element& center,
                                      std::size_t radius) {
  G.require_member(center);
  std::vector<Element> steps(G.generators().begin(), G.generators().end());
  for (const auto& s : G.generators()) steps.push_back(invert(s));

  std::vector<Element> out{center};
  std::unordered_set<Element> seen{center};
  std::size_t layer_begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : steps) {
        auto next = multiply(out[i], s);
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    }
    if (out.size() == layer_end) break;
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace cardmetric
