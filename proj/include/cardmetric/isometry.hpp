#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cardmetric/automorphisms.hpp"
#include "cardmetric/cayley.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/group_map.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/notation.hpp"

namespace cardmetric {

inline constexpr std::size_t default_bruteforce_bound = 8;

/// Permutation σ of colour (generator) indices.
struct ColorPermutation {
  std::vector<std::size_t> sigma;

  bool is_identity() const {
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (sigma[i] != i) return false;
    return true;
  }

  friend bool operator==(const ColorPermutation&, const ColorPermutation&) = default;
};

using ColorPermutingMap = std::pair<GroupMap, ColorPermutation>;

/// Backtracking search over bijections of {0..n-1}. Vertices are assigned in
/// increasing order and images tried in increasing order, so results come
/// out in lexicographic order of their image arrays. `Checker` decides
/// whether assigning u ↦ fu is consistent with every earlier assignment and
/// may keep state that it restores in `unassign`.
template <typename Checker, typename Emit>
void search_bijections(std::size_t n, Checker& checker, Emit&& emit) {
  std::vector<std::size_t> image(n, npos);
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, std::size_t u) -> void {
    if (u == n) {
      emit(image);
      return;
    }
    for (std::size_t fu = 0; fu < n; ++fu) {
      if (used[fu]) continue;
      if (!checker.assign(u, fu, image)) continue;
      image[u] = fu;
      used[fu] = true;
      self(self, u + 1);
      used[fu] = false;
      image[u] = npos;
      checker.unassign(u, fu);
    }
  };
  recurse(recurse, 0);
}

namespace detail {

/// to(f u, f v) == from(u, v) on every assigned pair.
class TableChecker {
 public:
  TableChecker(const MetricTable& from, const MetricTable& to) : from_(&from), to_(&to) {}

  bool assign(std::size_t u, std::size_t fu, const std::vector<std::size_t>& image) const {
    for (std::size_t v = 0; v < u; ++v)
      if ((*to_)(fu, image[v]) != (*from_)(u, v)) return false;
    return true;
  }
  void unassign(std::size_t, std::size_t) const {}

 private:
  const MetricTable* from_;
  const MetricTable* to_;
};

/// Dense colour matrix of a digraph: colour of u -> v, or -1.
inline std::vector<long> color_matrix(const ColorDigraph& d) {
  const std::size_t n = d.size();
  std::vector<long> m(n * n, -1);
  for (const auto& a : d.arcs()) m[a.tail * n + a.head] = static_cast<long>(a.color);
  return m;
}

/// Colour-preserving (fixed σ = id) or colour-permuting (σ discovered on
/// the fly) digraph automorphism test on assigned pairs.
class ColorChecker {
 public:
  ColorChecker(const ColorDigraph& d, bool permuting)
      : n_(d.size()),
        colors_(color_matrix(d)),
        permuting_(permuting),
        sigma_(d.color_count(), npos),
        sigma_inv_(d.color_count(), npos) {}

  bool assign(std::size_t u, std::size_t fu, const std::vector<std::size_t>& image) {
    const std::size_t mark = trail_.size();
    auto fits = [&](long c, long fc) {
      if ((c < 0) != (fc < 0)) return false;
      if (c < 0) return true;
      if (!permuting_) return c == fc;
      auto cc = static_cast<std::size_t>(c), fcc = static_cast<std::size_t>(fc);
      if (sigma_[cc] == npos && sigma_inv_[fcc] == npos) {
        sigma_[cc] = fcc;
        sigma_inv_[fcc] = cc;
        trail_.push_back(cc);
        return true;
      }
      return sigma_[cc] == fcc;
    };
    for (std::size_t v = 0; v < u; ++v) {
      if (!fits(colors_[u * n_ + v], colors_[fu * n_ + image[v]]) ||
          !fits(colors_[v * n_ + u], colors_[image[v] * n_ + fu])) {
        rollback(mark);
        return false;
      }
    }
    marks_.push_back(mark);
    return true;
  }

  void unassign(std::size_t, std::size_t) {
    rollback(marks_.back());
    marks_.pop_back();
  }

  /// σ for the current full assignment; unused colours are matched in order.
  ColorPermutation sigma() const {
    ColorPermutation out{sigma_};
    std::vector<bool> taken(sigma_.size(), false);
    for (auto s : sigma_)
      if (s != npos) taken[s] = true;
    std::size_t next = 0;
    for (auto& s : out.sigma) {
      if (s != npos) continue;
      while (taken[next]) ++next;
      s = next;
      taken[next] = true;
    }
    return out;
  }

 private:
  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      auto c = trail_.back();
      trail_.pop_back();
      sigma_inv_[sigma_[c]] = npos;
      sigma_[c] = npos;
    }
  }

  std::size_t n_;
  std::vector<long> colors_;
  bool permuting_;
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> sigma_inv_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> marks_;
};

inline void require_within(const char* what, std::size_t size, std::size_t bound) {
  if (size > bound) throw BoundExceeded(what, size, bound);
}

}  // namespace detail

/// L_a : h ↦ a·h on G.elements() indices.
inline GroupMap left_translation(const GeneratedGroup& G, const Element& a) {
  const auto ai = G.index_of(a);
  std::vector<std::size_t> img(G.order());
  for (std::size_t h = 0; h < img.size(); ++h) img[h] = G.multiply_index(ai, h);
  return GroupMap(std::move(img), ai == 0);
}

/// Aut(G, S): automorphisms with τ(S) = S as a set.
inline std::vector<GroupMap> aut_setwise_S(const GeneratedGroup& G,
                                           std::size_t bound = default_automorphism_bound) {
  std::vector<std::size_t> gens;
  for (const auto& s : G.generators()) gens.push_back(G.index_of(s));
  std::vector<bool> in_s(G.order(), false);
  for (auto s : gens) in_s[s] = true;
  std::vector<GroupMap> out;
  for (auto& tau : automorphisms(G, bound)) {
    bool keeps = true;
    for (auto s : gens) keeps = keeps && in_s[tau(s)];
    if (keeps) out.push_back(std::move(tau));
  }
  return out;
}

/// Every vertex bijection α with colour(α g, α h) = colour(g, h) on all
/// ordered pairs, found by exhaustive search with arc-consistency pruning.
inline std::vector<GroupMap> color_preserving_auts_bruteforce(
    const ColorDigraph& d, std::size_t bound = default_bruteforce_bound) {
  detail::require_within("colour-preserving automorphism search", d.size(), bound);
  detail::ColorChecker checker(d, false);
  std::vector<GroupMap> out;
  search_bijections(d.size(), checker, [&](const auto& img) { out.emplace_back(img); });
  return out;
}

/// Every vertex bijection that is a colour-permuting digraph automorphism,
/// with its colour permutation, by exhaustive search.
inline std::vector<ColorPermutingMap> color_permuting_auts_bruteforce(
    const ColorDigraph& d, std::size_t bound = default_bruteforce_bound) {
  detail::require_within("colour-permuting automorphism search", d.size(), bound);
  detail::ColorChecker checker(d, true);
  std::vector<ColorPermutingMap> out;
  search_bijections(d.size(), checker,
                    [&](const auto& img) { out.emplace_back(GroupMap(img), checker.sigma()); });
  return out;
}

/// The σ with α(g·c) = α(g)·σ(c) for every arc, if α is a colour-permuting
/// automorphism of d.
inline std::optional<ColorPermutation> check_color_permuting(const ColorDigraph& d,
                                                             const GroupMap& alpha) {
  if (alpha.size() != d.size() || !GroupMap::check_bijective(alpha.image)) return std::nullopt;
  const std::size_t m = d.color_count();
  std::vector<std::size_t> sigma(m, npos), sigma_inv(m, npos);
  for (const auto& a : d.arcs()) {
    auto c = d.color_of(alpha(a.tail), alpha(a.head));
    if (!c) return std::nullopt;
    if (sigma[a.color] == npos && sigma_inv[*c] == npos) {
      sigma[a.color] = *c;
      sigma_inv[*c] = a.color;
    } else if (sigma[a.color] != *c) {
      return std::nullopt;
    }
  }
  // Colours without arcs (only possible in truncations) are matched in order.
  std::size_t next = 0;
  for (auto& s : sigma) {
    if (s != npos) continue;
    while (sigma_inv[next] != npos) ++next;
    s = next;
    sigma_inv[next] = 0;
  }
  return ColorPermutation{std::move(sigma)};
}

/// {L_a ∘ τ : a ∈ G, τ ∈ Aut(G, S)} on d's vertex indices, a outermost, with
/// σ read off from τ's action on S.
inline std::vector<ColorPermutingMap> color_permuting_auts(
    const GeneratedGroup& G, const ColorDigraph& d,
    std::size_t bound = default_automorphism_bound) {
  if (d.is_truncated() || d.size() != G.order())
    throw Error("constructive colour-permuting automorphisms need the full digraph of G");
  std::vector<std::size_t> to_vertex(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) to_vertex[g] = d.vertex_index(G.elements()[g]);

  auto taus = aut_setwise_S(G, bound);
  std::vector<ColorPermutingMap> out;
  for (std::size_t a = 0; a < G.order(); ++a) {
    for (const auto& tau : taus) {
      std::vector<std::size_t> img(d.size());
      for (std::size_t g = 0; g < G.order(); ++g)
        img[to_vertex[g]] = to_vertex[G.multiply_index(a, tau(g))];
      ColorPermutation sigma;
      for (const auto& s : G.generators())
        sigma.sigma.push_back(*G.generator_index(G.elements()[tau(G.index_of(s))]));
      out.emplace_back(GroupMap(std::move(img), a == 0), std::move(sigma));
    }
  }
  return out;
}

/// to(f x, f y) == from(x, y) for all pairs.
inline bool is_isometry(const GroupMap& f, const MetricTable& from, const MetricTable& to) {
  if (f.size() != from.size()) throw DimensionMismatch("map size does not match source table");
  for (auto y : f.image)
    if (y >= to.size()) throw DimensionMismatch("map image outside target table");
  for (std::size_t x = 0; x < from.size(); ++x)
    for (std::size_t y = x + 1; y < from.size(); ++y)
      if (to(f(x), f(y)) != from(x, y)) return false;
  return true;
}

/// Every self-bijection preserving the table, by exhaustive search.
inline std::vector<GroupMap> isometry_group_bruteforce(const MetricTable& t,
                                                       std::size_t bound = default_bruteforce_bound) {
  detail::require_within("isometry search", t.size(), bound);
  detail::TableChecker checker(t, t);
  std::vector<GroupMap> out;
  search_bijections(t.size(), checker, [&](const auto& img) { out.emplace_back(img); });
  return out;
}

/// Every bijection f with to(f x, f y) = from(x, y), by exhaustive search.
inline std::vector<GroupMap> isometries_between(const MetricTable& from, const MetricTable& to,
                                                std::size_t bound = default_bruteforce_bound) {
  if (from.size() != to.size()) return {};
  detail::require_within("isometry search", from.size(), bound);
  detail::TableChecker checker(from, to);
  std::vector<GroupMap> out;
  search_bijections(from.size(), checker, [&](const auto& img) { out.emplace_back(img); });
  return out;
}

/// Raised when a map handed to decompose_isometry is not an isometry
/// (G, d_C) -> (G, d_W). Carries the first failing pair.
class DecompositionError : public Error {
 public:
  DecompositionError(std::size_t x, std::size_t y, std::size_t cardinal, std::size_t word)
      : Error("decomposition invalid: map is not an isometry (G, d_C) -> (G, d_W) at pair (" +
              std::to_string(x) + ", " + std::to_string(y) + "): d_C = " +
              std::to_string(cardinal) + ", d_W of images = " + std::to_string(word)),
        pair_(x, y) {}

  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

struct DecompositionReport {
  bool fixes_identity = false;
  bool generators_to_letters = false;  // T̃(S) ⊆ S ∪ S^-1
  bool nonexpansive = false;           // d_W(T̃g, T̃h) ≤ d_W(g, h)
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;

  bool all_pass() const { return fixes_identity && generators_to_letters && nonexpansive; }
};

struct IsometryDecomposition {
  Element translation;  // a = T(e)
  GroupMap reduced;     // T̃ = L_{a^-1} ∘ T
  DecompositionReport report;
};

/// Splits an isometry T : (G, d_C) -> (G, d_W) as L_a ∘ T̃ and checks the
/// properties T̃ must have. T acts on G.elements() indices.
inline IsometryDecomposition decompose_isometry(const GroupMap& T, const GeneratedGroup& G,
                                                std::size_t radius_cap = default_radius_cap) {
  const std::size_t n = G.order();
  if (T.size() != n) throw DimensionMismatch("map size does not match the group order");
  auto cardinal = metric_table(G, MetricKind::cardinal, radius_cap);
  auto word = metric_table(G, MetricKind::word, radius_cap);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (word(T(x), T(y)) != cardinal(x, y))
        throw DecompositionError(x, y, cardinal(x, y), word(T(x), T(y)));

  const auto a = T(0);
  auto reduced = after(left_translation(G, G.elements()[G.inverse_index(a)]), T);

  DecompositionReport report;
  report.fixes_identity = reduced(0) == 0;
  report.generators_to_letters = true;
  for (std::size_t i = 0; i < G.generator_count(); ++i) {
    auto img = reduced(G.index_of(G.generators()[i]));
    bool letter = false;
    for (std::size_t j = 0; j < G.generator_count(); ++j)
      letter = letter || img == G.right_multiply(0, j) || img == G.right_multiply_inverse(0, j);
    report.generators_to_letters = report.generators_to_letters && letter;
  }
  report.nonexpansive = true;
  for (std::size_t x = 0; x < n && report.nonexpansive; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (word(reduced(x), reduced(y)) > word(x, y)) {
        report.nonexpansive = false;
        report.first_failure = std::pair{x, y};
        break;
      }
  return {G.elements()[a], std::move(reduced), report};
}

}  // namespace cardmetric
