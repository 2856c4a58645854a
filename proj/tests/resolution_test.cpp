#include "gext/resolution.hpp"

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace gext {
namespace {

Rim R(int n, std::vector<int> e) { return Rim(n, std::move(e)); }

TEST(ProjectiveCoverTest, SummandsArePeaks) {
  EXPECT_EQ(projective_cover(R(5, {1, 2, 3})).summands, (std::vector<int>{5}));
  const auto big = projective_cover(R(15, {1, 2, 4, 9, 11, 12, 14}));
  EXPECT_EQ(big.summands, (std::vector<int>{3, 8, 10, 13, 15}));
  EXPECT_EQ(big.rank(), 5);
  EXPECT_EQ(projective_cover(R(6, {1, 2, 4, 5})).rank(), 2);
}

TEST(PresentationMatrixTest, SinglePeakIsDegenerate) {
  const auto d = build_D(R(5, {1, 2, 3}));
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.size(), 1u);
  ASSERT_EQ(d.entries.size(), 2u);
  EXPECT_EQ(d.entries[0].exponent + d.entries[1].exponent, 5);
}

TEST(PresentationMatrixTest, AlternatingRimHasUnitDistances) {
  const auto d = build_D(R(4, {1, 3}));
  EXPECT_FALSE(d.degenerate);
  ASSERT_EQ(d.entries.size(), 4u);
  for (const auto& e : d.entries) EXPECT_EQ(e.exponent, 1);
}

TEST(PresentationMatrixTest, FivePeakRimHasTwoCyclicDiagonals) {
  const auto d = build_D(R(15, {1, 2, 4, 9, 11, 12, 14}));
  EXPECT_EQ(d.size(), 5u);
  for (const auto& e : d.entries) {
    const std::size_t diff = (e.row + 5 - e.col) % 5;
    EXPECT_TRUE(diff == 0 || diff == 1);
    EXPECT_EQ(e.kind == ArrowKind::Y, diff == 0);
    EXPECT_EQ(e.sign, diff == 0 ? -1 : 1);
  }
  EXPECT_EQ(d.col_peaks, (std::vector<int>{3, 8, 10, 13, 15}));
  EXPECT_EQ(d.row_valleys, (std::vector<int>{2, 4, 9, 12, 14}));
}

TEST(SyzygyTest, EvenSteps) {
  const Rim big = R(15, {1, 2, 4, 9, 11, 12, 14});
  EXPECT_EQ(syzygy_rim_even(big, 0), big);
  EXPECT_EQ(syzygy_rim_even(big, 1), R(15, {1, 3, 4, 6, 8, 9, 11}));
  EXPECT_EQ(syzygy_rim_even(R(8, {1, 3, 5, 7}), 1), R(8, {1, 3, 5, 7}));
  EXPECT_THROW(syzygy_rim_even(R(5, {1, 2, 3}), 1), Error);
}

TEST(SyzygyTest, TwoPeakSteps) {
  const Rim a = R(6, {1, 2, 4, 5});
  EXPECT_EQ(syzygy_rim_two_peak(a, 0), a);
  EXPECT_EQ(syzygy_rim_two_peak(a, 3), a);
  EXPECT_NE(syzygy_rim_two_peak(a, 1), a);
  EXPECT_EQ(syzygy_rim_two_peak(R(6, {1, 2, 5}), 4), R(6, {1, 2, 5}));
  EXPECT_THROW(syzygy_rim_two_peak(R(8, {1, 3, 5, 7}), 1), Error);
  try {
    syzygy_rim_two_peak(R(5, {1, 2, 3}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTwoPeak);
  }
}

struct PeriodCase {
  int n;
  std::vector<int> rim;
  int period;
};

class PeriodGoldenTest : public ::testing::TestWithParam<PeriodCase> {};

TEST_P(PeriodGoldenTest, BothRoutes) {
  const auto& c = GetParam();
  const Rim rim = R(c.n, c.rim);
  EXPECT_EQ(period_closed_form(rim), PeriodResult::finite(c.period));
  EXPECT_EQ(period_iterative(rim), PeriodResult::finite(c.period));
}

INSTANTIATE_TEST_SUITE_P(Known, PeriodGoldenTest,
                         ::testing::Values(PeriodCase{6, {1, 2, 4, 5}, 3}, PeriodCase{6, {1, 2, 5}, 4},
                                           PeriodCase{15, {1, 2, 4, 9, 11, 12, 14}, 30},
                                           PeriodCase{8, {1, 3, 5, 7}, 2},
                                           PeriodCase{12, {1, 2, 4, 5, 7, 8, 10, 11}, 6},
                                           PeriodCase{4, {1, 3}, 2}));

TEST(PeriodTest, ProjectiveVariant) {
  const auto p = period_closed_form(R(5, {1, 2, 3}));
  EXPECT_TRUE(p.is_projective());
  EXPECT_EQ(p.to_string(), "projective");
  EXPECT_EQ(period_iterative(R(5, {1, 2, 3})), p);
  EXPECT_THROW(p.value(), Error);
}

TEST(PeriodTest, MinSolvingExcludesZero) {
  EXPECT_EQ(detail::min_t_solving(0, 3, 6), 2);
  EXPECT_EQ(detail::min_t_solving(1, 2, 4), detail::kNoSolution);
}

void check_rim(const Rim& rim) {
  const int n = rim.n(), k = rim.k();
  const int bound = 2 * n / std::gcd(n, k);
  const auto closed = period_closed_form(rim);
  ASSERT_EQ(closed, period_iterative(rim)) << rim;
  if (closed.is_projective()) return;
  const int m = closed.value();
  const int p = peak_count(rim);
  EXPECT_EQ(bound % m, 0) << rim;
  if (p >= 3) EXPECT_EQ(m % 2, 0) << rim;
  EXPECT_EQ(syzygy_rim_even(rim, n / std::gcd(n, k)), rim);

  // segment alignment in the closed form is equivalent to set equality
  if (p >= 3) {
    for (int t = 1; t < m / 2; ++t) EXPECT_NE(shift(rim, static_cast<long long>(t) * k), rim) << rim;
  }

  if (p == 2) {
    const Rim once = syzygy_rim_two_peak(rim, 1);
    EXPECT_EQ(once, oracle::first_syzygy_two_peak(rim)) << rim;
    EXPECT_EQ(syzygy_rim_two_peak(once, 1), shift(rim, k)) << rim;
    EXPECT_EQ(peak_count(once), 2);
    for (int t = 0; t <= 3; ++t) EXPECT_EQ(syzygy_rim_two_peak(rim, 2 * t), syzygy_rim_even(rim, t));
    for (int s = 1; s < m; ++s) EXPECT_NE(syzygy_rim_two_peak(rim, s), rim) << rim << " step " << s;
  }

  const auto d = build_D(rim);
  std::vector<int> per_row(p, 0), per_col(p, 0);
  for (const auto& e : d.entries) {
    ++per_row[e.row];
    ++per_col[e.col];
    EXPECT_GE(e.exponent, 1);
    EXPECT_LE(e.exponent, n - 1);
  }
  for (int x = 0; x < p; ++x) EXPECT_TRUE(per_row[x] == 2 && per_col[x] == 2);
}

class PeriodExhaustiveTest : public ::testing::TestWithParam<int> {};

TEST_P(PeriodExhaustiveTest, ClosedFormMatchesIteration) {
  const int n = GetParam();
  for (int k = 1; k < n; ++k)
    for (const Rim& rim : all_rims(n, k)) check_rim(rim);
}

INSTANTIATE_TEST_SUITE_P(AllRims, PeriodExhaustiveTest, ::testing::Range(2, 11));

TEST(PeriodRandomTest, ClosedFormMatchesIterationUpTo30) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> nd(11, 30);
  for (int trial = 0; trial < 3000; ++trial) check_rim(oracle::random_rim(rng, nd(rng)));
}

}  // namespace
}  // namespace gext
