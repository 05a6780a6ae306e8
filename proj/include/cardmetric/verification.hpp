#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cardmetric/automorphisms.hpp"
#include "cardmetric/cayley.hpp"
#include "cardmetric/fixtures.hpp"
#include "cardmetric/geometry.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/isometry.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/notation.hpp"

namespace cardmetric {

inline constexpr std::array<std::string_view, 12> check_ids = {
    "NORM-AXIOMS",  "DC-LE-CARD-S",       "DC-LE-DW",      "THM31-ORACLE",
    "CAUT-EQ-LA",   "PAUT-EQ-LATAU",      "PAUT-ISOMETRY", "BILIP-BOUND",
    "CYCLIC-NO-ISOMETRY", "DISCRETE-BALL", "DECOMPOSE-ISOMETRY", "QI-DIVERGENCE"};

struct SuiteConfig {
  std::size_t bruteforce_bound = default_bruteforce_bound;
  std::size_t automorphism_bound = default_automorphism_bound;
  std::size_t radius_cap = default_radius_cap;
  /// Infinite fixtures without their own radius are examined on this ball.
  std::size_t default_ball_radius = 2;
  std::uint64_t seed = 0x5eed'c0de;
  std::size_t random_maps = 100;
  Rational qi_K{2};
  Rational qi_c{3};
  /// Applied to every word and cardinal table before the checks run.
  std::function<MetricTable(const std::string& fixture, MetricTable)> table_filter;
};

enum class CheckStatus { pass, fail, not_applicable };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    default: return "N/A";
  }
}

struct CheckOutcome {
  std::string fixture;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // counterexample for failures, reason for N/A
};

struct CheckResult {
  std::string id;
  bool passed = true;
  std::vector<CheckOutcome> outcomes;

  const CheckOutcome* first_failure() const {
    for (const auto& o : outcomes)
      if (o.status == CheckStatus::fail) return &o;
    return nullptr;
  }
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // in check_ids order

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Fisher-Yates driven directly by the engine output, so the sequence of
/// maps depends only on the seed.
inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

namespace detail {

struct FixtureContext {
  const Fixture* fixture;
  std::vector<Element> vertices;
  MetricTable word;
  MetricTable cardinal;
};

inline std::string pair_text(const FixtureContext& ctx, std::size_t x, std::size_t y) {
  return "(" + format_element(ctx.vertices[x]) + ", " + format_element(ctx.vertices[y]) + ")";
}

using CheckFn = CheckOutcome (*)(const FixtureContext&, const SuiteConfig&);

inline CheckOutcome pass(const FixtureContext& ctx, std::string detail = {}) {
  return {ctx.fixture->name, CheckStatus::pass, std::move(detail)};
}
inline CheckOutcome fail(const FixtureContext& ctx, std::string detail) {
  return {ctx.fixture->name, CheckStatus::fail, std::move(detail)};
}
inline CheckOutcome skip(const FixtureContext& ctx, std::string detail) {
  return {ctx.fixture->name, CheckStatus::not_applicable, std::move(detail)};
}

inline CheckOutcome check_norm_axioms(const FixtureContext& ctx, const SuiteConfig&) {
  const auto& G = ctx.fixture->group;
  CardinalNorms norm(G);
  for (const auto& g : ctx.vertices) {
    auto n = norm(g);
    if ((n == 0) != g.is_identity())
      return fail(ctx, "positivity fails at " + format_element(g));
    if (norm(invert(g)) != n) return fail(ctx, "inverse symmetry fails at " + format_element(g));
  }
  for (std::size_t x = 0; x < ctx.vertices.size(); ++x)
    for (std::size_t y = 0; y < ctx.vertices.size(); ++y) {
      const auto& g = ctx.vertices[x];
      const auto& h = ctx.vertices[y];
      if (norm(multiply(g, h)) > norm(g) + norm(h))
        return fail(ctx, "subadditivity fails at " + pair_text(ctx, x, y));
    }
  return pass(ctx);
}

inline CheckOutcome check_card_bound(const FixtureContext& ctx, const SuiteConfig&) {
  const auto bound = ctx.fixture->group.generator_count();
  for (std::size_t x = 0; x < ctx.vertices.size(); ++x)
    for (std::size_t y = x + 1; y < ctx.vertices.size(); ++y)
      if (ctx.cardinal(x, y) > bound)
        return fail(ctx, "d_C" + pair_text(ctx, x, y) + " = " + std::to_string(ctx.cardinal(x, y)) +
                             " > |S| = " + std::to_string(bound));
  return pass(ctx);
}

inline CheckOutcome check_dc_le_dw(const FixtureContext& ctx, const SuiteConfig&) {
  for (std::size_t x = 0; x < ctx.vertices.size(); ++x)
    for (std::size_t y = x + 1; y < ctx.vertices.size(); ++y)
      if (ctx.cardinal(x, y) > ctx.word(x, y))
        return fail(ctx, "d_C" + pair_text(ctx, x, y) + " = " + std::to_string(ctx.cardinal(x, y)) +
                             " > d_W = " + std::to_string(ctx.word(x, y)));
  return pass(ctx);
}

inline CheckOutcome check_color_oracle(const FixtureContext& ctx, const SuiteConfig&) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  if (G.generator_count() == 0) return skip(ctx, "empty generating set");
  auto d = build_color_digraph(G);
  for (std::size_t x = 0; x < G.order(); ++x)
    for (std::size_t y = x + 1; y < G.order(); ++y) {
      auto colors = min_color_connectivity(d, x, y).colors;
      if (colors != ctx.cardinal(x, y))
        return fail(ctx, "colour count " + std::to_string(colors) + " != d_C " +
                             std::to_string(ctx.cardinal(x, y)) + " at " + pair_text(ctx, x, y));
    }
  return pass(ctx);
}

inline CheckOutcome check_caut(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  if (G.generator_count() == 0) return skip(ctx, "empty generating set");
  if (G.order() > cfg.bruteforce_bound)
    return skip(ctx, "order " + std::to_string(G.order()) + " exceeds brute-force bound " +
                         std::to_string(cfg.bruteforce_bound));
  auto found = color_preserving_auts_bruteforce(build_color_digraph(G), cfg.bruteforce_bound);
  std::vector<GroupMap> expected;
  for (const auto& a : G.elements()) expected.push_back(left_translation(G, a));
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  if (found != expected)
    return fail(ctx, std::to_string(found.size()) + " colour-preserving automorphisms, expected " +
                         std::to_string(expected.size()) + " left translations");
  return pass(ctx, std::to_string(found.size()) + " maps");
}

inline std::vector<ColorPermutingMap> sorted(std::vector<ColorPermutingMap> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

inline CheckOutcome check_paut(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  if (G.generator_count() == 0) return skip(ctx, "empty generating set");
  if (G.order() > cfg.bruteforce_bound)
    return skip(ctx, "order " + std::to_string(G.order()) + " exceeds brute-force bound " +
                         std::to_string(cfg.bruteforce_bound));
  auto d = build_color_digraph(G);
  auto brute = sorted(color_permuting_auts_bruteforce(d, cfg.bruteforce_bound));
  auto constructive = sorted(color_permuting_auts(G, d, cfg.automorphism_bound));
  if (brute != constructive)
    return fail(ctx, std::to_string(brute.size()) + " colour-permuting automorphisms by search, " +
                         std::to_string(constructive.size()) + " maps L_a o tau");
  for (const auto& [alpha, sigma] : constructive)
    if (check_color_permuting(d, alpha) != sigma)
      return fail(ctx, "constructive map fails the colour-permuting check");
  return pass(ctx, std::to_string(brute.size()) + " maps");
}

inline CheckOutcome check_paut_isometry(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  if (G.generator_count() == 0) return skip(ctx, "empty generating set");
  if (G.order() > cfg.automorphism_bound)
    return skip(ctx, "order exceeds automorphism bound");
  auto d = build_color_digraph(G);
  auto maps = color_permuting_auts(G, d, cfg.automorphism_bound);
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!is_isometry(maps[i].first, ctx.cardinal, ctx.cardinal))
      return fail(ctx, "colour-permuting map #" + std::to_string(i) + " is not a d_C isometry");
  return pass(ctx, std::to_string(maps.size()) + " maps");
}

inline CheckOutcome check_bilipschitz(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  if (G.order() < 2) return skip(ctx, "trivial group");
  auto other = fixtures::complete(G);
  auto dt = metric_table(other, MetricKind::cardinal, cfg.radius_cap);
  const auto L = detail::as_rational(std::max(G.generator_count(), other.generator_count()) + 1);
  const auto K = detail::as_rational(diameter(ctx.word));

  std::mt19937_64 rng(cfg.seed);
  for (std::size_t trial = 0; trial < cfg.random_maps; ++trial) {
    GroupMap f(random_permutation(G.order(), rng));
    for (std::size_t x = 0; x < G.order(); ++x)
      for (std::size_t y = x + 1; y < G.order(); ++y) {
        auto ds = detail::as_rational(ctx.cardinal(f(x), f(y)));
        auto t = detail::as_rational(dt(x, y));
        if (t / L > ds || ds > L * t)
          return fail(ctx, "cardinal sandwich fails for map #" + std::to_string(trial) + " at " +
                               pair_text(ctx, x, y));
        auto w = detail::as_rational(ctx.word(x, y));
        if (w / K > ds || ds > K * w)
          return fail(ctx, "word/cardinal sandwich (K = diam d_W) fails for map #" +
                               std::to_string(trial) + " at " + pair_text(ctx, x, y));
      }
  }
  return pass(ctx, std::to_string(cfg.random_maps) + " maps, seed " + std::to_string(cfg.seed));
}

inline CheckOutcome check_cyclic(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  const bool cyclic_single = G.generator_count() == 1 && G.order() >= 4;
  const bool complete = G.order() >= 2 && G.generator_count() + 1 == G.order();
  if (!cyclic_single && !complete) return skip(ctx, "neither cyclic with |S| = 1 and n >= 4 nor S = G \\ {e}");
  if (G.order() > cfg.bruteforce_bound)
    return skip(ctx, "order exceeds brute-force bound");
  auto iso = isometries_between(ctx.word, ctx.cardinal, cfg.bruteforce_bound);
  if (cyclic_single && !iso.empty())
    return fail(ctx, "found an isometry (G, d_W) -> (G, d_C) for a cyclic group of order " +
                         std::to_string(G.order()));
  if (complete && !is_isometry(GroupMap::identity(G.order()), ctx.word, ctx.cardinal))
    return fail(ctx, "identity is not an isometry (G, d_W) -> (G, d_C) with S = G \\ {e}");
  return pass(ctx, std::to_string(iso.size()) + " isometries");
}

inline CheckOutcome check_discrete_ball(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  for (auto kind : {MetricKind::cardinal, MetricKind::word}) {
    for (const auto& x : ctx.vertices) {
      auto b = ball(G, BallSpec{x, Rational(1, 2), kind}, ctx.vertices, cfg.radius_cap);
      if (b.size() != 1 || b.front() != x)
        return fail(ctx, std::string("open ball of radius 1/2 (") + std::string(to_string(kind)) +
                             ") at " + format_element(x) + " has " + std::to_string(b.size()) +
                             " points");
    }
  }
  return pass(ctx);
}

inline CheckOutcome check_decompose(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (!G.is_finite()) return skip(ctx, "infinite group");
  if (G.order() < 2) return skip(ctx, "trivial group");
  if (G.order() > 64) return skip(ctx, "complete generating set too large");
  auto K = fixtures::complete(G);
  std::vector<GroupMap> maps{GroupMap::identity(K.order())};
  for (std::size_t a = 1; a < K.order(); ++a) maps.push_back(left_translation(K, K.elements()[a]));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    auto dec = decompose_isometry(maps[i], K, cfg.radius_cap);
    if (!dec.report.all_pass())
      return fail(ctx, "decomposition report fails for map #" + std::to_string(i));
    if (dec.translation != K.elements()[maps[i](0)] || dec.reduced != GroupMap::identity(K.order()))
      return fail(ctx, "decomposition of L_a is not (a, identity) for map #" + std::to_string(i));
  }
  return pass(ctx, std::to_string(maps.size()) + " isometries on S = G \\ {e}");
}

inline CheckOutcome check_qi(const FixtureContext& ctx, const SuiteConfig& cfg) {
  const auto& G = ctx.fixture->group;
  if (G.is_finite()) return skip(ctx, "finite diameter");
  auto report = qi_violation_scan(GroupMap::identity(ctx.vertices.size()), cfg.qi_K, cfg.qi_c,
                                  ctx.word, ctx.cardinal);
  const auto threshold = cfg.qi_K * (detail::as_rational(G.generator_count()) + cfg.qi_c);
  std::size_t far_pairs = 0;
  for (std::size_t x = 0; x < ctx.vertices.size(); ++x)
    for (std::size_t y = x + 1; y < ctx.vertices.size(); ++y) {
      if (detail::as_rational(ctx.word(x, y)) <= threshold) continue;
      ++far_pairs;
      bool listed = std::any_of(report.violations.begin(), report.violations.end(), [&](const auto& v) {
        return v.pair == std::pair{x, y} && v.bound == Violation::Bound::lower;
      });
      if (!listed)
        return fail(ctx, "pair " + pair_text(ctx, x, y) + " has d_W above K(|S| + c) = " +
                             to_string(threshold) + " but no lower-bound violation");
    }
  return pass(ctx, std::to_string(far_pairs) + " pairs beyond K(|S| + c), " +
                       std::to_string(report.violations.size()) + " violations (evidence, not proof)");
}

inline constexpr std::array<CheckFn, 12> check_fns = {
    check_norm_axioms, check_card_bound, check_dc_le_dw,      check_color_oracle,
    check_caut,        check_paut,       check_paut_isometry, check_bilipschitz,
    check_cyclic,      check_discrete_ball, check_decompose,  check_qi};

}  // namespace detail

/// Runs every check over every fixture. Failures and bound skips
/// are report entries, never exceptions; one result per check id, in the
/// fixed id order. An empty fixture list gives an empty report.
inline VerificationReport run_verification_suite(std::span<const Fixture> fixtures,
                                                 const SuiteConfig& config = {}) {
  VerificationReport report;
  report.seed = config.seed;
  if (fixtures.empty()) return report;

  std::vector<detail::FixtureContext> contexts;
  for (const auto& fx : fixtures) {
    detail::FixtureContext ctx{&fx, {}, {}, {}};
    ctx.vertices = fx.group.is_finite()
                       ? fx.group.elements()
                       : word_ball(fx.group, fx.group.identity(),
                                   fx.ball_radius.value_or(config.default_ball_radius));
    ctx.word = metric_table(fx.group, ctx.vertices, MetricKind::word, config.radius_cap);
    ctx.cardinal = metric_table(fx.group, ctx.vertices, MetricKind::cardinal, config.radius_cap);
    if (config.table_filter) {
      ctx.word = config.table_filter(fx.name, std::move(ctx.word));
      ctx.cardinal = config.table_filter(fx.name, std::move(ctx.cardinal));
    }
    contexts.push_back(std::move(ctx));
  }

  for (std::size_t c = 0; c < check_ids.size(); ++c) {
    CheckResult result{std::string(check_ids[c]), true, {}};
    for (const auto& ctx : contexts) {
      CheckOutcome outcome;
      try {
        outcome = detail::check_fns[c](ctx, config);
      } catch (const Error& e) {
        outcome = detail::fail(ctx, std::string("error: ") + e.what());
      }
      if (outcome.status == CheckStatus::fail) result.passed = false;
      result.outcomes.push_back(std::move(outcome));
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace cardmetric
