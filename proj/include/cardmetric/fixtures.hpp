#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardmetric/group.hpp"
#include "cardmetric/notation.hpp"

namespace cardmetric {

/// A named group for the verification suite. Infinite backends are
/// examined on the word ball of `ball_radius` around the identity.
struct Fixture {
  std::string name;
  GeneratedGroup group;
  std::optional<std::size_t> ball_radius;
};

namespace fixtures {

inline GeneratedGroup permutation_group(std::size_t degree,
                                        std::initializer_list<std::string_view> gens) {
  std::vector<Permutation> perms;
  for (auto g : gens) perms.push_back(parse_cycle_notation(g, degree));
  return GeneratedGroup::permutation(degree, std::move(perms));
}

/// (1 2 ... n) raised to the given power.
inline Permutation rotation(std::size_t n, std::size_t power) {
  std::vector<Permutation::point_type> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Permutation::point_type>((i + power) % n);
  return Permutation(std::move(img));
}

/// ℤ_n in its regular representation on n points, S = {r^k : k ∈ powers}
/// where r = (1 2 ... n). Element r^k is the residue k.
inline GeneratedGroup cyclic(std::size_t n, std::initializer_list<std::size_t> powers) {
  std::vector<Permutation> gens;
  for (auto k : powers) gens.push_back(rotation(n, k));
  return GeneratedGroup::permutation(n, std::move(gens));
}

/// Finite G with S = G \ {e}; its Cayley graph is complete.
inline GeneratedGroup complete(const GeneratedGroup& G) {
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < G.order(); ++i) gens.push_back(G.elements()[i].permutation());
  return GeneratedGroup::permutation(G.dimension(), std::move(gens));
}

/// Right regular representation of a quaternion unit on points 1..8.
/// Units are indexed 2*u + neg with u ∈ {1, i, j, k}.
inline Permutation quaternion(std::size_t unit, bool negative) {
  // unit products: table[a][b] = {unit, sign flip}
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> table = {{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  std::vector<Permutation::point_type> img(8);
  for (std::size_t x = 0; x < 8; ++x) {
    std::size_t xu = x / 2;
    bool xneg = x % 2;
    auto [pu, flip] = table[xu][unit];
    bool neg = xneg ^ negative ^ (flip != 0);
    img[x] = static_cast<Permutation::point_type>(2 * pu + (neg ? 1 : 0));
  }
  return Permutation(std::move(img));
}

inline GeneratedGroup s3() { return permutation_group(3, {"(1 2)", "(1 2 3)"}); }
inline GeneratedGroup s3_t() { return permutation_group(3, {"(1 2)", "(1 3)", "(1 2 3)"}); }

/// ℤ with S = {1}.
inline GeneratedGroup integers() { return GeneratedGroup::free_abelian(1, {LatticeVector{1}}); }

inline LatticeVector integer(long long v) { return LatticeVector{v}; }

/// s_n = b_1 + ... + b_n in ℤ^rank.
inline LatticeVector partial_sum(std::size_t rank, std::size_t n) {
  std::vector<Integer> c(rank);
  for (std::size_t i = 0; i < n; ++i) c[i] = 1;
  return LatticeVector(std::move(c));
}

}  // namespace fixtures

/// S₃, S₄, D₄, ℤ₄, ℤ₆ and Q₈ under two generating sets each, a ball in ℤ,
/// and ℤ³ under its standard basis and the basis of partial sums.
inline std::vector<Fixture> default_fixtures(std::size_t integer_ball_radius = 10,
                                             std::size_t lattice_ball_radius = 2) {
  using namespace fixtures;
  std::vector<Fixture> out;
  out.push_back({"S3/S", s3(), {}});
  out.push_back({"S3/T", s3_t(), {}});
  out.push_back({"S4/S", permutation_group(4, {"(1 2)", "(1 2 3 4)"}), {}});
  out.push_back({"S4/T", permutation_group(4, {"(1 2)", "(2 3)", "(3 4)"}), {}});
  out.push_back({"D4/S", permutation_group(4, {"(1 2 3 4)", "(1 3)"}), {}});
  out.push_back({"D4/T", permutation_group(4, {"(1 3)", "(1 2)(3 4)"}), {}});
  out.push_back({"Z4/S", cyclic(4, {1}), {}});
  out.push_back({"Z4/T", cyclic(4, {1, 2}), {}});
  out.push_back({"Z6/S", cyclic(6, {2, 3}), {}});
  out.push_back({"Z6/T", cyclic(6, {1}), {}});
  out.push_back({"Q8/S", GeneratedGroup::permutation(8, {quaternion(1, false), quaternion(2, false)}), {}});
  out.push_back({"Q8/T", GeneratedGroup::permutation(
                             8, {quaternion(1, false), quaternion(2, false), quaternion(3, false)}),
                 {}});
  out.push_back({"Z", integers(), integer_ball_radius});
  out.push_back({"Z3/std", GeneratedGroup::standard_lattice(3), lattice_ball_radius});
  out.push_back({"Z3/sums",
                 GeneratedGroup::free_abelian(3, {partial_sum(3, 1), partial_sum(3, 2), partial_sum(3, 3)}),
                 lattice_ball_radius});
  return out;
}

}  // namespace cardmetric
