#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cardmetric/automorphisms.hpp"
#include "cardmetric/cayley.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/fixtures.hpp"
#include "cardmetric/geometry.hpp"
#include "cardmetric/isometry.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/rational.hpp"
#include "cardmetric/spec_io.hpp"
#include "cardmetric/verification.hpp"

namespace cardmetric::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

namespace detail {

struct Options {
  std::string spec_path;
  std::optional<std::string> metric;
  std::size_t radius_cap = default_radius_cap;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> truncate;
  std::string element;
  std::string from = "e";
  std::string to = "e";
  std::string format = "dot";
  std::string iso_class = "caut";
  std::string K = "2";
  std::string c = "3";
  std::string map = "identity";
  std::string radii = "1,2,3";
  bool json = false;
};

struct LoadedSpec {
  GroupSpec spec;
  GeneratedGroup group;
};

inline MetricKind metric_or(const Options& o, const char* fallback) {
  return parse_metric_kind(o.metric.value_or(fallback));
}

inline LoadedSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto spec = read_group_spec(parse_json_text(buf.str()));
  auto group = build_group(spec);
  return {std::move(spec), std::move(group)};
}

inline std::size_t bruteforce_bound(const Options& o) {
  if (o.bound) return *o.bound;
  if (const char* env = std::getenv("CARDMETRIC_BOUND")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
    throw Error(std::string("CARDMETRIC_BOUND must be a nonnegative integer, got '") + env + "'");
  }
  return default_bruteforce_bound;
}

/// Vertex set a command works on: all of a finite group, or the word ball
/// of --truncate (falling back to the spec's ball_radius).
inline std::vector<Element> vertex_set(const LoadedSpec& s, const Options& o) {
  auto radius = o.truncate ? o.truncate : s.spec.ball_radius;
  if (radius) {
    if (*radius > o.radius_cap) throw RadiusCapExceeded(o.radius_cap);
    return word_ball(s.group, s.group.identity(), *radius);
  }
  if (!s.group.is_finite())
    throw InfiniteEnumeration("infinite group: pass --truncate R to work on a word ball");
  return s.group.elements();
}

inline std::vector<std::size_t> parse_radii(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error("malformed radius '" + item + "' in --radii");
    }
  }
  return out;
}

inline GroupMap comparison_map(const std::string& spec, std::size_t n) {
  if (spec == "identity") return GroupMap::identity(n);
  if (spec.rfind("seeded:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(spec.substr(7));
    } catch (const std::logic_error&) {
      throw Error("malformed seed in --map '" + spec + "'");
    }
    std::mt19937_64 rng(seed);
    return GroupMap(random_permutation(n, rng));
  }
  throw Error("--map must be identity or seeded:N");
}

inline int cmd_norm(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  auto g = parse_element_text(s.group, o.element);
  DistanceOracle oracle(s.group, metric_or(o, "cardinal"), o.radius_cap);
  out << oracle.norm(g) << "\n";
  return exit_ok;
}

inline int cmd_dist(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  auto g = parse_element_text(s.group, o.from);
  auto h = parse_element_text(s.group, o.to);
  DistanceOracle oracle(s.group, metric_or(o, "cardinal"), o.radius_cap);
  out << oracle.distance(g, h) << "\n";
  return exit_ok;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  auto t = metric_table(s.group, vertex_set(s, o), metric_or(o, "cardinal"), o.radius_cap);
  out << table_to_json(t).dump(2) << "\n";
  return exit_ok;
}

inline int cmd_diameter(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  auto t = metric_table(s.group, vertex_set(s, o), metric_or(o, "cardinal"), o.radius_cap);
  out << diameter(t) << "\n";
  return exit_ok;
}

inline int cmd_graph(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  std::optional<TruncationRequest> trunc;
  if (auto r = o.truncate ? o.truncate : s.spec.ball_radius)
    trunc = TruncationRequest{s.group.identity(), *r, o.radius_cap};
  auto d = build_color_digraph(s.group, trunc);
  out << (o.format == "json" ? export_json(d) : export_dot(d));
  return exit_ok;
}

inline int cmd_isometries(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  const auto bound = bruteforce_bound(o);
  Json j;
  j["class"] = o.iso_class;
  std::vector<Element> vertices;
  Json maps = Json::array();
  if (o.iso_class == "bruteforce") {
    auto t = metric_table(s.group, vertex_set(s, o), metric_or(o, "cardinal"), o.radius_cap);
    vertices = t.vertices();
    j["metric"] = std::string(to_string(t.kind()));
    for (const auto& f : isometry_group_bruteforce(t, bound)) maps.push_back({{"images", map_to_json(f)}});
  } else {
    auto d = build_color_digraph(s.group);
    vertices = d.vertices();
    std::vector<ColorPermutingMap> results;
    if (o.iso_class == "caut") {
      ColorPermutation id;
      for (std::size_t c = 0; c < d.color_count(); ++c) id.sigma.push_back(c);
      for (auto& f : color_preserving_auts_bruteforce(d, bound)) results.emplace_back(std::move(f), id);
    } else {
      results = color_permuting_auts(s.group, d);
    }
    for (const auto& [f, sigma] : results) {
      Json sig = Json::array();
      for (auto c : sigma.sigma) sig.push_back(c);
      maps.push_back({{"images", map_to_json(f)}, {"sigma", sig}});
    }
  }
  j["vertices"] = Json::array();
  for (const auto& v : vertices) j["vertices"].push_back(element_to_json(v));
  j["count"] = maps.size();
  j["maps"] = std::move(maps);
  out << j.dump(2) << "\n";
  return exit_ok;
}

inline int cmd_compare(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  auto vertices = vertex_set(s, o);
  auto from_kind = metric_or(o, "word");
  auto to_kind = from_kind == MetricKind::word ? MetricKind::cardinal : MetricKind::word;
  auto from = metric_table(s.group, vertices, from_kind, o.radius_cap);
  auto to = metric_table(s.group, vertices, to_kind, o.radius_cap);
  auto report = qi_violation_scan(comparison_map(o.map, vertices.size()), parse_rational(o.K),
                                  parse_rational(o.c), from, to);
  Json j = comparison_to_json(report);
  j["from_metric"] = std::string(to_string(from_kind));
  j["to_metric"] = std::string(to_string(to_kind));
  j["map"] = o.map;
  out << j.dump(2) << "\n";
  return exit_ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<Fixture> fixtures;
  if (o.spec_path.empty()) {
    fixtures = default_fixtures();
  } else {
    auto s = load_spec(o.spec_path);
    auto radius = o.truncate ? o.truncate : s.spec.ball_radius;
    fixtures.push_back({o.spec_path, std::move(s.group), radius});
  }
  SuiteConfig config;
  config.bruteforce_bound = bruteforce_bound(o);
  config.radius_cap = o.radius_cap;
  auto report = run_verification_suite(fixtures, config);
  if (o.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    for (const auto& check : report.checks) {
      out << (check.passed ? "PASS " : "FAIL ") << check.id << "\n";
      for (const auto& outcome : check.outcomes)
        if (outcome.status == CheckStatus::fail)
          out << "  " << outcome.fixture << ": " << outcome.detail << "\n";
    }
  }
  return report.all_passed() ? exit_ok : exit_domain_error;
}

inline int cmd_growth(const Options& o, std::ostream& out) {
  auto s = load_spec(o.spec_path);
  auto radii = parse_radii(o.radii);
  for (const auto& [r, d] : diameter_growth(s.group, metric_or(o, "cardinal"), radii, o.radius_cap))
    out << r << " " << d << "\n";
  return exit_ok;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Exit status: 0 success, 1 domain error, 2 usage.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word and cardinal metrics on generated groups", "cardmetric"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_common = [&](CLI::App* cmd, bool spec_required) {
    auto* spec = cmd->add_option("--spec", o.spec_path, "group spec JSON file")->check(CLI::ExistingFile);
    if (spec_required) spec->required();
    cmd->add_option("--radius-cap", o.radius_cap, "word-metric BFS radius cap")->check(CLI::PositiveNumber);
    cmd->add_option("--bound", o.bound, "brute-force vertex bound (overrides CARDMETRIC_BOUND)");
  };
  auto add_metric = [&](CLI::App* cmd) {
    cmd->add_option("--metric", o.metric, "word or cardinal")
        ->check(CLI::IsMember({"word", "cardinal"}));
  };

  auto* norm = app.add_subcommand("norm", "norm of an element");
  add_common(norm, true);
  add_metric(norm);
  norm->add_option("--element", o.element, "element (cycle notation or integer vector)")->required();

  auto* dist = app.add_subcommand("dist", "distance between two elements");
  add_common(dist, true);
  add_metric(dist);
  dist->add_option("--from", o.from)->required();
  dist->add_option("--to", o.to)->required();

  auto* table = app.add_subcommand("table", "pairwise distance table as JSON");
  add_common(table, true);
  add_metric(table);
  table->add_option("--truncate", o.truncate, "restrict to the word ball of radius R");

  auto* diam = app.add_subcommand("diameter", "diameter of the metric");
  add_common(diam, true);
  add_metric(diam);
  diam->add_option("--truncate", o.truncate, "restrict to the word ball of radius R");

  auto* graph = app.add_subcommand("graph", "Cayley colour digraph as DOT or JSON");
  add_common(graph, true);
  graph->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--truncate", o.truncate, "restrict to the word ball of radius R");

  auto* iso = app.add_subcommand("isometries", "colour-preserving/-permuting automorphisms or metric isometries");
  add_common(iso, true);
  add_metric(iso);
  iso->add_option("--class", o.iso_class)->check(CLI::IsMember({"caut", "paut", "bruteforce"}));
  iso->add_option("--truncate", o.truncate, "restrict to the word ball of radius R (bruteforce)");

  auto* compare = app.add_subcommand("compare", "quasi-isometry scan between word and cardinal metrics");
  add_common(compare, true);
  add_metric(compare);
  compare->add_option("--K", o.K, "multiplicative constant (rational)");
  compare->add_option("--c", o.c, "additive constant (rational)");
  compare->add_option("--map", o.map, "identity or seeded:N");
  compare->add_option("--truncate", o.truncate, "restrict to the word ball of radius R");

  auto* verify = app.add_subcommand("verify", "run the verification checks (built-in fixtures without --spec)");
  add_common(verify, false);
  verify->add_option("--truncate", o.truncate, "word-ball radius for infinite groups");
  verify->add_flag("--json", o.json, "print the report as JSON");

  auto* growth = app.add_subcommand("growth", "diameter of word balls of increasing radius");
  add_common(growth, true);
  add_metric(growth);
  growth->add_option("--radii", o.radii, "comma-separated increasing radii");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage_error;
  }

  try {
    if (*norm) return detail::cmd_norm(o, out);
    if (*dist) return detail::cmd_dist(o, out);
    if (*table) return detail::cmd_table(o, out);
    if (*diam) return detail::cmd_diameter(o, out);
    if (*graph) return detail::cmd_graph(o, out);
    if (*iso) return detail::cmd_isometries(o, out);
    if (*compare) return detail::cmd_compare(o, out);
    if (*verify) return detail::cmd_verify(o, out);
    if (*growth) return detail::cmd_growth(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain_error;
  }
  return exit_usage_error;
}

}  // namespace cardmetric::cli
