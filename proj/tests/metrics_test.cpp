#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace cardmetric;
using cardmetric::oracle::perm;

namespace {

TEST(CardinalNorm, S3Values) {
  auto S = fixtures::s3();
  auto T = fixtures::s3_t();
  EXPECT_EQ(cardinal_norm(S, perm(3, "(1 3)")), 2u);
  EXPECT_EQ(cardinal_norm(T, perm(3, "(1 3)")), 1u);
  EXPECT_EQ(cardinal_norm(S, perm(3, "(1 2)")), 1u);
  EXPECT_EQ(cardinal_norm(S, perm(3, "(1 3 2)")), 1u);
  EXPECT_EQ(cardinal_norm(S, S.identity()), 0u);
}

TEST(CardinalNorm, MatchesNaiveOracleOnEveryFiniteFixture) {
  for (const auto& G : oracle::finite_test_groups()) {
    auto expect = oracle::naive_cardinal_norms(G);
    CardinalNorms norm(G);
    for (std::size_t g = 0; g < G.order(); ++g) EXPECT_EQ(norm(G.elements()[g]), expect[g]);
  }
}

TEST(CardinalNorm, Integers) {
  auto Z = fixtures::integers();
  EXPECT_EQ(cardinal_norm(Z, fixtures::integer(0)), 0u);
  for (long long n : {1, -1, 2, 17, -400}) EXPECT_EQ(cardinal_norm(Z, fixtures::integer(n)), 1u);
  EXPECT_EQ(cardinal_distance(Z, fixtures::integer(3), fixtures::integer(-7)), 1u);
}

TEST(CardinalNorm, PartialSumsInStandardLattice) {
  for (std::size_t k = 3; k <= 6; ++k) {
    auto G = GeneratedGroup::standard_lattice(k);
    for (std::size_t n = 1; n <= k; ++n) {
      auto s = fixtures::partial_sum(k, n);
      EXPECT_EQ(cardinal_distance(G, G.identity(), s), n);
    }
  }
}

TEST(CardinalNorm, TooManyGeneratorsRefused) {
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < 64; ++i) {
    std::vector<Integer> c(64);
    c[i] = 1;
    gens.emplace_back(std::move(c));
  }
  auto G = GeneratedGroup::free_abelian(64, gens);
  EXPECT_THROW(CardinalNorms{G}, BoundExceeded);
  EXPECT_EQ(word_norm(G, gens[5]), 1u);
}

TEST(CardinalNorm, NonMemberRejected) {
  auto A4 = GeneratedGroup::permutation(4, {perm(4, "(1 2 3)"), perm(4, "(2 3 4)")});
  EXPECT_THROW(cardinal_norm(A4, perm(4, "(1 2)")), BackendMismatch);
  EXPECT_THROW(cardinal_norm(fixtures::integers(), LatticeVector{1, 2}), Error);
}

TEST(WordNorm, MatchesFloydWarshall) {
  for (const auto& G : oracle::finite_test_groups()) {
    auto d = oracle::all_pairs_word_distance(G);
    auto t = metric_table(G, MetricKind::word);
    for (std::size_t x = 0; x < G.order(); ++x)
      for (std::size_t y = 0; y < G.order(); ++y) EXPECT_EQ(t(x, y), d[x][y]);
  }
}

TEST(WordNorm, Integers) {
  auto Z = fixtures::integers();
  EXPECT_EQ(word_norm(Z, fixtures::integer(-9)), 9u);
  EXPECT_EQ(word_distance(Z, fixtures::integer(3), fixtures::integer(-7)), 10u);
}

TEST(WordNorm, RadiusCap) {
  auto Z = fixtures::integers();
  EXPECT_THROW(word_norm(Z, fixtures::integer(11), 10), RadiusCapExceeded);
  EXPECT_EQ(word_norm(Z, fixtures::integer(10), 10), 10u);
}

TEST(Distances, DcBelowDwAndCardinality) {
  for (const auto& G : oracle::finite_test_groups()) {
    auto w = metric_table(G, MetricKind::word);
    auto c = metric_table(G, MetricKind::cardinal);
    for (std::size_t x = 0; x < G.order(); ++x)
      for (std::size_t y = 0; y < G.order(); ++y) {
        EXPECT_LE(c(x, y), w(x, y));
        EXPECT_LE(c(x, y), G.generator_count());
      }
  }
}

TEST(Distances, StrictInequalityInIntegers) {
  auto Z = fixtures::integers();
  for (long long m = -5; m <= 5; ++m)
    for (long long n = m + 2; n <= m + 8; ++n) {
      EXPECT_LT(cardinal_distance(Z, fixtures::integer(m), fixtures::integer(n)),
                word_distance(Z, fixtures::integer(m), fixtures::integer(n)));
    }
}

TEST(NormAxioms, PropertyOverRandomElements) {
  std::mt19937_64 rng(0xabcdef);
  for (const auto& G : oracle::finite_test_groups()) {
    for (auto kind : {MetricKind::cardinal, MetricKind::word}) {
      DistanceOracle d(G, kind);
      for (int trial = 0; trial < 150; ++trial) {
        const auto& g = G.elements()[rng() % G.order()];
        const auto& h = G.elements()[rng() % G.order()];
        const auto& a = G.elements()[rng() % G.order()];
        EXPECT_EQ(d.norm(g) == 0, g.is_identity());
        EXPECT_EQ(d.norm(g), d.norm(inverse(G, g)));
        EXPECT_LE(d.norm(compose(G, g, h)), d.norm(g) + d.norm(h));
        EXPECT_EQ(d.distance(compose(G, a, g), compose(G, a, h)), d.distance(g, h));
        EXPECT_EQ(d.distance(g, h), d.distance(h, g));
      }
    }
  }
}

TEST(NormAxioms, LatticeProperty) {
  std::mt19937_64 rng(42);
  auto G = GeneratedGroup::free_abelian(3, {fixtures::partial_sum(3, 1), fixtures::partial_sum(3, 2),
                                            fixtures::partial_sum(3, 3)});
  auto draw = [&] {
    std::vector<Integer> c(3);
    for (auto& x : c) x = static_cast<long long>(rng() % 7) - 3;
    return Element(LatticeVector(std::move(c)));
  };
  DistanceOracle d(G, MetricKind::cardinal);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = draw(), h = draw(), a = draw();
    EXPECT_EQ(d.norm(g) == 0, g.is_identity());
    EXPECT_EQ(d.norm(g), d.norm(inverse(G, g)));
    EXPECT_LE(d.norm(compose(G, g, h)), d.norm(g) + d.norm(h));
    EXPECT_EQ(d.distance(compose(G, a, g), compose(G, a, h)), d.distance(g, h));
    EXPECT_LE(d.norm(g), 3u);
  }
}

TEST(MetricTable, DiagonalSymmetryAndIndex) {
  auto G = fixtures::s3();
  auto t = metric_table(G, MetricKind::cardinal);
  EXPECT_EQ(t.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(t(i, i), 0u);
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(t(i, j), t(j, i));
  }
  EXPECT_EQ(t.index_of(perm(3, "(1 2)")), G.index_of(perm(3, "(1 2)")));
  EXPECT_EQ(diameter(t), 2u);
  EXPECT_EQ(diameter(metric_table(G, MetricKind::word)), 2u);
}

TEST(MetricTable, Errors) {
  auto G = fixtures::s3();
  std::vector<Element> dup{G.identity(), G.identity()};
  EXPECT_THROW(metric_table(G, dup, MetricKind::word), Error);
  EXPECT_THROW(metric_table(G, MetricKind::cardinal).index_of(perm(4, "(1 2)")), VertexNotFound);
  EXPECT_THROW(diameter(MetricTable{}), Error);
  EXPECT_THROW(MetricTable({G.identity()}, MetricKind::word, {}, {0, 0}), DimensionMismatch);
  EXPECT_THROW(metric_table(fixtures::integers(), MetricKind::word), InfiniteEnumeration);
}

TEST(MetricTable, WithEntryIsSymmetric) {
  auto t = metric_table(fixtures::s3(), MetricKind::word).with_entry(1, 4, 9);
  EXPECT_EQ(t(1, 4), 9u);
  EXPECT_EQ(t(4, 1), 9u);
}

TEST(Ball, DiscreteAtHalf) {
  auto G = fixtures::s3();
  for (const auto& x : G.elements()) {
    auto b = ball(G, {x, Rational(1, 2), MetricKind::cardinal}, G.elements());
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b.front(), x);
  }
}

TEST(Ball, RadiusSemanticsAreOpen) {
  auto G = fixtures::s3();
  EXPECT_EQ(ball(G, {G.identity(), Rational(1), MetricKind::cardinal}, G.elements()).size(), 1u);
  EXPECT_EQ(ball(G, {G.identity(), Rational(3, 2), MetricKind::cardinal}, G.elements()).size(), 4u);
  EXPECT_EQ(ball(G, {G.identity(), Rational(3), MetricKind::cardinal}, G.elements()).size(), 6u);
  EXPECT_TRUE(ball(G, {G.identity(), Rational(0), MetricKind::word}, G.elements()).empty());
}

TEST(Ball, Errors) {
  auto G = fixtures::s3();
  EXPECT_THROW(ball(G, {G.identity(), Rational(-1), MetricKind::word}, G.elements()), Error);
  std::vector<Element> universe{perm(3, "(1 2)")};
  EXPECT_THROW(ball(G, {G.identity(), Rational(1), MetricKind::word}, universe), VertexNotFound);
}

TEST(Ball, IntegersCardinal) {
  auto Z = fixtures::integers();
  auto universe = word_ball(Z, Z.identity(), 10);
  EXPECT_EQ(ball(Z, {fixtures::integer(3), Rational(1, 2), MetricKind::cardinal}, universe).size(), 1u);
  EXPECT_EQ(ball(Z, {fixtures::integer(3), Rational(3, 2), MetricKind::cardinal}, universe).size(), 21u);
}

TEST(MetricKind, Parsing) {
  EXPECT_EQ(parse_metric_kind("word"), MetricKind::word);
  EXPECT_EQ(parse_metric_kind("cardinal"), MetricKind::cardinal);
  EXPECT_THROW(parse_metric_kind("euclid"), Error);
}

TEST(Combinations, LexicographicOrder) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_combination(4, 2, [&](const auto& c) {
    seen.push_back(c);
    return false;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  std::size_t empty = 0;
  for_each_combination(3, 0, [&](const auto&) { return ++empty, false; });
  EXPECT_EQ(empty, 1u);
  EXPECT_FALSE(for_each_combination(2, 3, [](const auto&) { return true; }));
}

}  // namespace
