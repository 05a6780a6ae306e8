#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace cardmetric;

namespace {

MetricTable integer_ball_table(std::size_t radius, MetricKind kind) {
  auto Z = fixtures::integers();
  return metric_table(Z, word_ball(Z, Z.identity(), radius), kind);
}

/// Smallest K by direct maximisation of both ratios with doubles, used
/// only as a cross-check of the exact rational computation.
double float_constant(const GroupMap& f, const MetricTable& from, const MetricTable& to) {
  double k = 1;
  for (std::size_t x = 0; x < from.size(); ++x)
    for (std::size_t y = x + 1; y < from.size(); ++y) {
      double a = static_cast<double>(from(x, y)), b = static_cast<double>(to(f(x), f(y)));
      k = std::max({k, a / b, b / a});
    }
  return k;
}

TEST(BiLipschitz, IdentityOnIdenticalTables) {
  auto t = metric_table(fixtures::s3(), MetricKind::word);
  auto k = bilipschitz_best_constant(GroupMap::identity(t.size()), t, t);
  ASSERT_FALSE(k.is_infinite());
  EXPECT_EQ(*k.finite, Rational(1));
}

TEST(BiLipschitz, Z4WordAgainstCardinal) {
  auto G = fixtures::cyclic(4, {1});
  auto k = bilipschitz_best_constant(GroupMap::identity(4), metric_table(G, MetricKind::word),
                                     metric_table(G, MetricKind::cardinal));
  EXPECT_EQ(to_string(k), "2");
}

TEST(BiLipschitz, InjectiveSelfMapsOfZ6) {
  auto S = fixtures::cyclic(6, {2, 3});
  auto T = fixtures::cyclic(6, {1});
  // both tables are indexed by residues through their own element order
  auto dS = metric_table(S, MetricKind::cardinal);
  auto dT = metric_table(T, MetricKind::cardinal);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GroupMap f(random_permutation(6, rng));
    auto k = bilipschitz_best_constant(f, dT, dS);
    ASSERT_FALSE(k.is_infinite());
    EXPECT_LE(*k.finite, Rational(static_cast<std::int64_t>(T.generator_count() + 1)));
  }
}

TEST(BiLipschitz, SymmetricUnderInverse) {
  std::mt19937_64 rng(5);
  for (const auto& G : oracle::finite_test_groups()) {
    auto w = metric_table(G, MetricKind::word);
    auto c = metric_table(G, MetricKind::cardinal);
    for (int trial = 0; trial < 10; ++trial) {
      GroupMap f(random_permutation(G.order(), rng));
      auto forward = bilipschitz_best_constant(f, w, c);
      auto backward = bilipschitz_best_constant(f.inverse(), c, w);
      EXPECT_EQ(forward.finite, backward.finite);
      EXPECT_DOUBLE_EQ(boost::rational_cast<double>(*forward.finite), float_constant(f, w, c));
    }
  }
}

TEST(BiLipschitz, WordDiameterBoundsEveryBijection) {
  std::mt19937_64 rng(77);
  for (const auto& G : oracle::finite_test_groups()) {
    auto w = metric_table(G, MetricKind::word);
    auto c = metric_table(G, MetricKind::cardinal);
    const Rational K(static_cast<std::int64_t>(diameter(w)));
    for (int trial = 0; trial < 20; ++trial) {
      GroupMap f(random_permutation(G.order(), rng));
      EXPECT_LE(*bilipschitz_best_constant(f, w, c).finite, K);
    }
  }
}

TEST(BiLipschitz, Errors) {
  auto t = metric_table(fixtures::s3(), MetricKind::word);
  EXPECT_THROW(bilipschitz_best_constant(GroupMap({0, 0, 1, 2, 3, 4}), t, t), Error);
  EXPECT_THROW(bilipschitz_best_constant(GroupMap::identity(3), t, t), DimensionMismatch);
  EXPECT_THROW(bilipschitz_best_constant(GroupMap({0, 1, 2, 3, 4, 9}), t, t), DimensionMismatch);
}

TEST(BiLipschitz, InjectiveIntoLargerTable) {
  auto small = metric_table(fixtures::cyclic(4, {1}), MetricKind::word);
  auto big = metric_table(fixtures::cyclic(6, {1}), MetricKind::word);
  auto k = bilipschitz_best_constant(GroupMap({0, 1, 2, 3}), small, big);
  EXPECT_FALSE(k.is_infinite());
}

TEST(QiScan, LargeConstantsHaveNoViolations) {
  auto w = integer_ball_table(10, MetricKind::word);
  auto c = integer_ball_table(10, MetricKind::cardinal);
  auto r = qi_violation_scan(GroupMap::identity(w.size()), Rational(21), Rational(21), w, c);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.from_diameter, 20u);
  EXPECT_EQ(r.to_diameter, 1u);
}

TEST(QiScan, IdenticalTablesExact) {
  auto t = metric_table(fixtures::s3(), MetricKind::cardinal);
  auto r = qi_violation_scan(GroupMap::identity(t.size()), Rational(1), Rational(0), t, t);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(to_string(r.best_constant), "1");
}

TEST(QiScan, ViolationsAreExactlyTheFarPairs) {
  for (std::size_t radius : {4u, 10u, 50u}) {
    auto w = integer_ball_table(radius, MetricKind::word);
    auto c = integer_ball_table(radius, MetricKind::cardinal);
    auto r = qi_violation_scan(GroupMap::identity(w.size()), Rational(2), Rational(3), w, c);
    std::size_t far = 0;
    for (std::size_t x = 0; x < w.size(); ++x)
      for (std::size_t y = x + 1; y < w.size(); ++y) far += w(x, y) > 8;
    EXPECT_EQ(r.violations.size(), far) << radius;
    for (const auto& v : r.violations) {
      EXPECT_EQ(v.bound, Violation::Bound::lower);
      EXPECT_GT(v.lhs, v.rhs);
      EXPECT_GT(w(v.pair.first, v.pair.second), 8u);
    }
    EXPECT_EQ(r.holds(), radius == 4);
  }
}

TEST(QiScan, UpperBoundViolations) {
  auto c = integer_ball_table(6, MetricKind::cardinal);
  auto w = integer_ball_table(6, MetricKind::word);
  auto r = qi_violation_scan(GroupMap::identity(c.size()), Rational(1), Rational(1, 2), c, w);
  ASSERT_FALSE(r.holds());
  for (const auto& v : r.violations) EXPECT_EQ(v.bound, Violation::Bound::upper);
}

TEST(QiScan, Errors) {
  auto t = metric_table(fixtures::s3(), MetricKind::word);
  auto id = GroupMap::identity(t.size());
  EXPECT_THROW(qi_violation_scan(id, Rational(0), Rational(0), t, t), Error);
  EXPECT_THROW(qi_violation_scan(id, Rational(-1), Rational(0), t, t), Error);
  EXPECT_THROW(qi_violation_scan(id, Rational(1), Rational(-1, 3), t, t), Error);
  EXPECT_THROW(qi_violation_scan(GroupMap::identity(2), Rational(1), Rational(0), t, t), DimensionMismatch);
}

TEST(QiScan, NonInjectiveMapHasInfiniteConstant) {
  auto t = metric_table(fixtures::s3(), MetricKind::word);
  auto r = qi_violation_scan(GroupMap({0, 0, 0, 0, 0, 0}), Rational(1), Rational(5), t, t);
  EXPECT_TRUE(r.best_constant.is_infinite());
  EXPECT_TRUE(r.holds());
}

TEST(Growth, IntegerWord) {
  std::vector<std::size_t> radii{1, 2, 3};
  auto g = diameter_growth(fixtures::integers(), MetricKind::word, radii);
  EXPECT_EQ(g, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 4}, {3, 6}}));
}

TEST(Growth, IntegerCardinalIsOne) {
  std::vector<std::size_t> radii{1, 5, 20};
  for (auto [r, d] : diameter_growth(fixtures::integers(), MetricKind::cardinal, radii)) EXPECT_EQ(d, 1u);
}

TEST(Growth, StandardLatticeCardinalMatchesBruteForce) {
  for (std::size_t k = 3; k <= 4; ++k) {
    auto G = GeneratedGroup::standard_lattice(k);
    std::vector<std::size_t> radii{1, 2, 3};
    for (auto [r, diam] : diameter_growth(G, MetricKind::cardinal, radii)) {
      // the cardinal norm of a vector is its number of nonzero coordinates,
      // and the word ball of radius r holds differences with up to 2r of them
      EXPECT_EQ(diam, std::min<std::size_t>(2 * r, k)) << k << " " << r;
    }
  }
}

TEST(Growth, Errors) {
  std::vector<std::size_t> radii{2, 2};
  EXPECT_THROW(diameter_growth(fixtures::integers(), MetricKind::word, radii), Error);
  std::vector<std::size_t> big{5};
  EXPECT_THROW(diameter_growth(fixtures::integers(), MetricKind::word, big, 4), RadiusCapExceeded);
}

}  // namespace
