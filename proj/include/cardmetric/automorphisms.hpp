#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "cardmetric/error.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/group_map.hpp"

namespace cardmetric {

inline constexpr std::size_t default_automorphism_bound = 24;

inline std::size_t element_order(const GeneratedGroup& G, std::size_t g) {
  std::size_t k = 1;
  for (std::size_t x = g; x != 0; x = G.multiply_index(x, g)) ++k;
  return k;
}

namespace detail {

/// Extends s_i ↦ images[i] to a map on all of G along the Cayley graph.
/// Returns an empty map if the assignment is inconsistent (not a
/// homomorphism).
inline std::vector<std::size_t> extend_homomorphism(const GeneratedGroup& G,
                                                    const std::vector<std::size_t>& images) {
  const std::size_t n = G.order();
  const std::size_t m = G.generator_count();
  std::vector<std::size_t> inv_images(m);
  for (std::size_t i = 0; i < m; ++i) inv_images[i] = G.inverse_index(images[i]);

  std::vector<std::size_t> phi(n, npos);
  phi[0] = 0;
  std::deque<std::size_t> queue{0};
  auto visit = [&](std::size_t h, std::size_t target) {
    if (phi[h] == npos) {
      phi[h] = target;
      queue.push_back(h);
      return true;
    }
    return phi[h] == target;
  };
  while (!queue.empty()) {
    auto g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < m; ++i) {
      if (!visit(G.right_multiply(g, i), G.multiply_index(phi[g], images[i]))) return {};
      if (!visit(G.right_multiply_inverse(g, i), G.multiply_index(phi[g], inv_images[i])))
        return {};
    }
  }
  return phi;
}

}  // namespace detail

/// All automorphisms of a finite G, as maps on G.elements() indices.
///
/// Generator images range over elements of matching order; tuples are
/// tried in lexicographic order of element index, which fixes the output
/// order.
inline std::vector<GroupMap> automorphisms(const GeneratedGroup& G,
                                           std::size_t bound = default_automorphism_bound) {
  G.require_finite("automorphism enumeration");
  if (G.order() > bound) throw BoundExceeded("automorphism enumeration", G.order(), bound);

  const std::size_t n = G.order();
  const std::size_t m = G.generator_count();
  std::vector<std::size_t> orders(n);
  for (std::size_t g = 0; g < n; ++g) orders[g] = element_order(G, g);

  std::vector<std::vector<std::size_t>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto s = G.index_of(G.generators()[i]);
    for (std::size_t g = 0; g < n; ++g)
      if (orders[g] == orders[s]) candidates[i].push_back(g);
  }

  std::vector<GroupMap> out;
  std::vector<std::size_t> pick(m, 0);
  std::vector<std::size_t> images(m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) images[i] = candidates[i][pick[i]];
    auto phi = detail::extend_homomorphism(G, images);
    if (!phi.empty() && GroupMap::check_bijective(phi)) out.emplace_back(std::move(phi), true);

    std::size_t i = m;
    while (i > 0 && ++pick[i - 1] == candidates[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace cardmetric
