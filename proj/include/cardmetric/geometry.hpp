#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cardmetric/error.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/group_map.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/rational.hpp"

namespace cardmetric {

struct Violation {
  enum class Bound { lower, upper };

  std::pair<std::size_t, std::size_t> pair;
  Bound bound = Bound::lower;
  /// lower: lhs = from/K - c, rhs = to(f x, f y); violated when lhs > rhs.
  /// upper: lhs = to(f x, f y), rhs = K*from + c; violated when lhs > rhs.
  Rational lhs;
  Rational rhs;
};

/// Outcome of comparing two metric tables through a vertex map.
struct ComparisonReport {
  ExtendedRational best_constant;  // smallest bi-Lipschitz K, or infinity
  Rational K;
  Rational c;
  std::vector<Violation> violations;
  std::size_t from_diameter = 0;
  std::size_t to_diameter = 0;

  bool holds() const { return violations.empty(); }
};

namespace detail {

inline void check_map_shape(const GroupMap& f, const MetricTable& from, const MetricTable& to) {
  if (f.size() != from.size()) throw DimensionMismatch("map size does not match source table");
  for (auto y : f.image)
    if (y >= to.size()) throw DimensionMismatch("map image outside target table");
}

inline bool injective(const GroupMap& f, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (auto y : f.image) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

inline Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

}  // namespace detail

/// Smallest K ≥ 1 with from(x,y)/K ≤ to(f x, f y) ≤ K·from(x,y) on all
/// pairs; infinite when one side vanishes and the other does not.
inline ExtendedRational bilipschitz_best_constant(const GroupMap& f, const MetricTable& from,
                                                  const MetricTable& to) {
  detail::check_map_shape(f, from, to);
  if (!detail::injective(f, to.size())) throw Error("bi-Lipschitz constant needs an injective map");
  Rational k(1);
  for (std::size_t x = 0; x < from.size(); ++x) {
    for (std::size_t y = x + 1; y < from.size(); ++y) {
      auto a = from(x, y);
      auto b = to(f(x), f(y));
      if (a == 0 && b == 0) continue;
      if (a == 0 || b == 0) return ExtendedRational::infinity();
      k = std::max({k, Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)),
                    Rational(static_cast<std::int64_t>(b), static_cast<std::int64_t>(a))});
    }
  }
  return {k};
}

/// Lists every pair violating from/K - c ≤ to(f x, f y) ≤ K·from + c.
inline ComparisonReport qi_violation_scan(const GroupMap& f, const Rational& K, const Rational& c,
                                          const MetricTable& from, const MetricTable& to) {
  if (K <= 0) throw Error("quasi-isometry constant K must be positive");
  if (c < 0) throw Error("quasi-isometry constant c must be nonnegative");
  detail::check_map_shape(f, from, to);

  ComparisonReport report;
  report.K = K;
  report.c = c;
  report.best_constant = detail::injective(f, to.size()) ? bilipschitz_best_constant(f, from, to)
                                                         : ExtendedRational::infinity();
  report.from_diameter = from.size() ? diameter(from) : 0;
  report.to_diameter = to.size() ? diameter(to) : 0;
  for (std::size_t x = 0; x < from.size(); ++x) {
    for (std::size_t y = x + 1; y < from.size(); ++y) {
      auto a = detail::as_rational(from(x, y));
      auto b = detail::as_rational(to(f(x), f(y)));
      if (a / K - c > b) report.violations.push_back({{x, y}, Violation::Bound::lower, a / K - c, b});
      if (b > K * a + c) report.violations.push_back({{x, y}, Violation::Bound::upper, b, K * a + c});
    }
  }
  return report;
}

/// Diameter of the metric restricted to the word ball of each radius
/// around the identity.
inline std::vector<std::pair<std::size_t, std::size_t>> diameter_growth(
    const GeneratedGroup& G, MetricKind kind, std::span<const std::size_t> radii,
    std::size_t radius_cap = default_radius_cap) {
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw Error("growth radii must be strictly increasing");
  DistanceOracle oracle(G, kind, radius_cap);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto r : radii) {
    if (r > radius_cap) throw RadiusCapExceeded(radius_cap);
    auto ball = word_ball(G, G.identity(), r);
    std::vector<Element> inverses;
    for (const auto& v : ball) inverses.push_back(invert(v));
    std::size_t diam = 0;
    for (std::size_t i = 0; i < ball.size(); ++i)
      for (std::size_t j = i + 1; j < ball.size(); ++j)
        diam = std::max(diam, oracle.norm(multiply(inverses[i], ball[j])));
    out.emplace_back(r, diam);
  }
  return out;
}

}  // namespace cardmetric
