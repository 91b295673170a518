#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "repbasis/error.hpp"
#include "repbasis/repcore.hpp"

using namespace repbasis;

namespace {

RepTarget ones() { return RepTarget::constant(RepValue(1)); }
RepTarget twos() { return RepTarget::constant(RepValue(2)); }
RepTarget zero_at_origin(RepValue rest) {
  return RepTarget::with_overrides(0, {{0, RepValue(0)}}, rest);
}

std::vector<std::int64_t> random_set(std::mt19937_64& rng, std::size_t max_size, std::int64_t span) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<std::int64_t> value(-span, span);
  std::vector<std::int64_t> v(size(rng));
  for (auto& x : v) x = value(rng);
  return v;
}

}  // namespace

TEST(RepFunction, KnownValues) {
  EXPECT_EQ(rep_function(FiniteBasis{1, 2, 3}, 4), 2u);
  EXPECT_EQ(rep_function(FiniteBasis{}, 5), 0u);
  EXPECT_EQ(rep_function(FiniteBasis{-4, 4}, 0), 1u);
}

TEST(RepFunction, HandlesExtremeMagnitudes) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  FiniteBasis a{-big, big};
  EXPECT_EQ(rep_function(a, 0), 1u);
  EXPECT_EQ(rep_function(a, 1), 0u);
}

TEST(RepFunction, MatchesBruteForceOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto raw = random_set(rng, 25, 40);
    FiniteBasis a(raw);
    for (std::int64_t n = -85; n <= 85; ++n) {
      ASSERT_EQ(rep_function(a, n), oracle::rep(raw, n)) << "n=" << n;
    }
  }
}

TEST(RepFunction, IgnoresInputOrderAndRepeats) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto raw = random_set(rng, 20, 30);
    auto shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.insert(shuffled.end(), raw.begin(), raw.end());
    FiniteBasis a(raw), b(shuffled);
    for (std::int64_t n = -60; n <= 60; ++n) ASSERT_EQ(rep_function(a, n), rep_function(b, n));
  }
}

TEST(RepProfile, KnownValues) {
  auto p1 = rep_profile(FiniteBasis{1});
  EXPECT_EQ(p1.lo(), -2);
  EXPECT_EQ(p1.hi(), 2);
  ASSERT_EQ(p1.entries().size(), 1u);
  EXPECT_EQ(p1.at(2), 1u);
  EXPECT_EQ(p1.at(0), 0u);

  auto p2 = rep_profile(FiniteBasis{1, 2, 3});
  std::vector<RepProfile::Entry> want{{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}};
  EXPECT_EQ(std::vector(p2.entries().begin(), p2.entries().end()), want);

  auto p3 = rep_profile(FiniteBasis{-4, 4});
  std::vector<RepProfile::Entry> want3{{-8, 1}, {0, 1}, {8, 1}};
  EXPECT_EQ(std::vector(p3.entries().begin(), p3.entries().end()), want3);
}

TEST(RepProfile, EmptySetIsAnError) {
  try {
    rep_profile(FiniteBasis{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySet);
  }
}

TEST(RepProfile, TotalIsTriangularAndMatchesOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto raw = random_set(rng, 40, 1000);
    FiniteBasis a(raw);
    if (a.empty()) continue;
    auto p = rep_profile(a);
    EXPECT_EQ(p.total(), a.size() * (a.size() + 1) / 2);
    auto want = oracle::profile(raw);
    ASSERT_EQ(p.entries().size(), want.size());
    for (const auto& [n, c] : p.entries()) {
      EXPECT_EQ(want.at(n), c);
      EXPECT_GE(n, p.lo());
      EXPECT_LE(n, p.hi());
    }
  }
}

TEST(RepProfile, RejectsSumsBeyondInt64) {
  FiniteBasis a{kMaxElementMagnitude + 1};
  EXPECT_THROW(rep_profile(a), Error);
}

TEST(Counting, KnownValues) {
  EXPECT_EQ(counting(FiniteBasis{1, 5, 9}, std::int64_t{0}, std::int64_t{6}), 2u);
  EXPECT_EQ(counting(FiniteBasis{}, std::int64_t{-10}, std::int64_t{10}), 0u);
  EXPECT_EQ(counting(FiniteBasis{-4, 4, 24, 48}, std::int64_t{-912}, std::int64_t{912}), 4u);
  EXPECT_EQ(counting(FiniteBasis{1, 5, 9}, std::int64_t{6}, std::int64_t{0}), 0u);
}

TEST(Counting, RealEndpointsRoundInward) {
  FiniteBasis a{1, 2, 3, 4};
  EXPECT_EQ(counting(a, 1.5L, 3.5L), 2u);
  EXPECT_EQ(counting(a, 1.0L, 4.0L), 4u);
  EXPECT_EQ(counting(a, -1e30L, 1e30L), 4u);
  EXPECT_EQ(counting(a, 3.5L, 3.7L), 0u);
}

TEST(Counting, MonotoneAndMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto raw = oracle::as_set(random_set(rng, 30, 50));
    FiniteBasis a(raw);
    std::size_t prev_x = 0;
    for (std::int64_t x = -60; x <= 60; ++x) {
      const std::size_t c = counting(a, std::int64_t{-10}, x);
      EXPECT_EQ(c, oracle::counting(raw, -10, x));
      EXPECT_GE(c, prev_x);
      prev_x = c;
    }
    std::size_t prev_y = a.size() + 1;
    for (std::int64_t y = -60; y <= 60; ++y) {
      const std::size_t c = counting(a, y, std::int64_t{10});
      EXPECT_LE(c, prev_y);
      prev_y = c;
    }
  }
}

TEST(D0, KnownValues) {
  EXPECT_EQ(d0_of(ones()), 1);
  EXPECT_EQ(d0_of(RepTarget::with_overrides(
                2, {{-2, RepValue(0)}, {-1, RepValue(0)}, {0, RepValue(0)}, {1, RepValue(0)}, {2, RepValue(0)}},
                RepValue(1))),
            3);
  EXPECT_EQ(d0_of(zero_at_origin(RepValue(2))), 1);
  EXPECT_EQ(d0_of(RepTarget::with_overrides(5, {{-4, RepValue(0)}}, RepValue(1))), 5);
}

TEST(RepTarget, RejectsZeroDefault) {
  EXPECT_THROW(RepTarget::constant(RepValue(0)), Error);
  EXPECT_THROW(RepTarget(1, {RepValue(1)}, RepValue(1)), Error);
  EXPECT_THROW(RepTarget::with_overrides(1, {{3, RepValue(1)}}, RepValue(1)), Error);
}

TEST(RepTarget, InfinityOrdersAboveFinite) {
  EXPECT_GT(RepValue::infinity(), RepValue(1'000'000));
  EXPECT_TRUE(RepValue::infinity().admits(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_FALSE(RepValue(2).admits(3));
  auto f = RepTarget::with_overrides(0, {{0, RepValue::infinity()}}, RepValue(1));
  EXPECT_EQ(f.max_finite(), 1u);
}

TEST(TargetPrefix, KnownValues) {
  EXPECT_EQ(target_prefix(ones(), 5), (std::vector<std::int64_t>{0, 1, -1, 2, -2}));
  EXPECT_EQ(target_prefix(twos(), 8), (std::vector<std::int64_t>{0, 1, -1, 0, 1, -1, 2, -2}));
  EXPECT_EQ(target_prefix(zero_at_origin(RepValue(1)), 4), (std::vector<std::int64_t>{1, -1, 2, -2}));
}

TEST(TargetPrefix, PrefixStable) {
  const auto f = RepTarget::with_overrides(
      2, {{-2, RepValue(3)}, {0, RepValue::infinity()}, {1, RepValue(0)}}, RepValue(2));
  const auto longer = target_prefix(f, 200);
  for (std::size_t m : {1u, 7u, 50u, 199u}) {
    auto shorter = target_prefix(f, m);
    EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  }
}

TEST(TargetPrefix, CountsNeverExceedTargetAndReachIt) {
  const auto f = RepTarget::with_overrides(
      3, {{-3, RepValue(0)}, {-1, RepValue(4)}, {0, RepValue::infinity()}, {2, RepValue(0)}, {3, RepValue(5)}},
      RepValue(2));
  const std::size_t m = 400;
  const auto u = target_prefix(f, m);
  std::map<std::int64_t, std::uint64_t> counts;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t c = ++counts[u[i]];
    ASSERT_TRUE(f.at(u[i]).admits(c)) << "u_" << i + 1 << " = " << u[i];
  }
  // Every small n with finite f(n) is exhausted in a long enough prefix.
  for (std::int64_t n = -10; n <= 10; ++n) {
    const RepValue fn = f.at(n);
    if (fn.is_infinite()) {
      EXPECT_GT(counts[n], 50u);
    } else {
      EXPECT_EQ(counts[n], fn.value()) << "n=" << n;
    }
  }
}

TEST(TargetSequence, OccurrencesAndTerms) {
  TargetSequence u(twos());
  EXPECT_EQ(u.term(4), 0);
  EXPECT_EQ(u.occurrences(0, 3), 1u);
  EXPECT_EQ(u.occurrences(0, 4), 2u);
  EXPECT_THROW(u.term(0), Error);
}

TEST(FiniteBasis, SetOperations) {
  FiniteBasis a{3, -1, 3, 7};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.max_abs(), 7);
  EXPECT_FALSE(a.contains_zero());
  std::int64_t extra[] = {0, -9};
  auto b = a.united(extra);
  EXPECT_TRUE(b.contains_zero());
  EXPECT_TRUE(b.includes(a));
  EXPECT_FALSE(a.includes(b));
  EXPECT_EQ(b.max_abs(), 9);
}
