#include "gext/trapezia.hpp"

#include <random>

#include "gext/snf.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace gext {
namespace {

Rim R(int n, std::vector<int> e) { return Rim(n, std::move(e)); }

const Rim kThreeBoxI = Rim(15, {2, 4, 9, 11, 12, 14, 15});
const Rim kThreeBoxJ = Rim(15, {1, 2, 4, 6, 7, 10, 13});

TEST(WordTest, ThreeBoxPair) {
  const auto w = build_word(kThreeBoxI, kThreeBoxJ);
  EXPECT_EQ(w.raw(), "LLRLRLR");
  EXPECT_EQ(w.reduced(), "LRLRLR");
  EXPECT_EQ(w.s(), 3);
  EXPECT_EQ(w.rotation, 0);
  EXPECT_EQ(w.boxes, (std::vector<Box>{{3, 1}, {1, 2}, {1, 2}}));
  EXPECT_EQ(w.letters.front(), (Trapezium{Side::L, 1, 1}));
  EXPECT_EQ(w.letters.back(), (Trapezium{Side::R, 2, 14}));
}

TEST(WordTest, EqualRimsGiveEmptyWord) {
  const auto w = build_word(kThreeBoxI, kThreeBoxI);
  EXPECT_EQ(w.raw(), "");
  EXPECT_EQ(w.s(), 0);
}

TEST(WordTest, AlternatingPair) {
  const auto w = build_word(R(4, {1, 3}), R(4, {2, 4}));
  EXPECT_EQ(w.raw(), "LRLR");
  EXPECT_EQ(w.s(), 2);
  EXPECT_EQ(w.rotation, 1);
}

TEST(WordTest, MismatchedParameters) {
  EXPECT_THROW(build_word(R(4, {1, 3}), R(5, {1, 3})), Error);
  try {
    build_word(R(6, {1, 3}), R(6, {1, 3, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MismatchedParameters);
  }
}

std::vector<int> diag_exponents(const MonomialMatrix& m) {
  std::vector<int> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(c, c)->exponent);
  return out;
}

std::vector<int> sub_exponents(const MonomialMatrix& m) {
  std::vector<int> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at((c + 1) % m.rows(), c)->exponent);
  return out;
}

TEST(DstarTest, ThreeBoxPair) {
  const auto m = build_Dstar(kThreeBoxI, kThreeBoxJ);
  EXPECT_EQ(m.col_labels(), (std::vector<int>{1, 3, 8, 10, 13}));
  EXPECT_EQ(m.row_labels(), (std::vector<int>{15, 2, 4, 9, 12}));
  EXPECT_EQ(diag_exponents(m), (std::vector<int>{1, 0, 2, 1, 1}));
  EXPECT_EQ(sub_exponents(m), (std::vector<int>{0, 0, 1, 2, 2}));
  EXPECT_EQ(m.entries().size(), 10u);
  for (std::size_t c = 0; c < 5; ++c) {
    EXPECT_EQ(m.at(c, c)->sign, -1);
    EXPECT_EQ(m.at((c + 1) % 5, c)->sign, 1);
  }
}

TEST(DstarTest, EqualRimsAllUnits) {
  const auto m = build_Dstar(kThreeBoxI, kThreeBoxI);
  for (const auto& [pos, x] : m.entries()) EXPECT_EQ(x.exponent, 0);
}

TEST(DstarTest, AlternatingPair) {
  const auto m = build_Dstar(R(4, {1, 3}), R(4, {2, 4}));
  EXPECT_EQ(diag_exponents(m), (std::vector<int>{1, 1}));
  EXPECT_EQ(sub_exponents(m), (std::vector<int>{1, 1}));
}

TEST(DstarTest, ProjectiveRejected) {
  EXPECT_THROW(build_Dstar(R(5, {1, 2, 3}), R(5, {1, 2, 4})), Error);
}

TEST(OffsetTest, CanonicalHomOffset) {
  EXPECT_EQ(canonical_hom_offset(kThreeBoxI, kThreeBoxI), 0);
  EXPECT_EQ(canonical_hom_offset(kThreeBoxI, kThreeBoxJ), 3);
}

TEST(OffsetTest, KernelCoefficientsThreeBoxPair) {
  const auto kc = kernel_coefficients(kThreeBoxI, kThreeBoxJ);
  EXPECT_EQ(kc.peaks, (std::vector<int>{1, 3, 8, 10, 13}));
  EXPECT_EQ(kc.alphas, (std::vector<int>{2, 2, 0, 0, 1}));
  EXPECT_EQ(kernel_coefficients(kThreeBoxI, kThreeBoxI).alphas, (std::vector<int>(5, 0)));
  const auto alt = kernel_coefficients(R(4, {1, 3}), R(4, {2, 4}));
  EXPECT_EQ(*std::min_element(alt.alphas.begin(), alt.alphas.end()), 0);
}

// Letters of the word whose edges fall in the arc from -> to.
int letter_edges_in(const TrapeziumWord& w, Side side, int from, int to, int n) {
  int count = 0;
  for (const auto& t : w.letters) {
    if (t.side != side) continue;
    for (int x = 0; x < t.length; ++x) {
      const int e = wrap_label(t.first_edge + x, n);
      if (forward_distance(from, e, n) >= 1 && forward_distance(from, e, n) <= forward_distance(from, to, n)) ++count;
    }
  }
  return count;
}

void check_pair(const Rim& i, const Rim& j) {
  const int n = i.n();
  const auto w = build_word(i, j);
  const auto back = build_word(j, i);

  // box balance and antisymmetry
  int left = 0, right = 0, only_i = 0;
  for (const auto& b : w.boxes) {
    left += b.left;
    right += b.right;
    ASSERT_GE(b.left, 1);
    ASSERT_GE(b.right, 1);
  }
  for (int e : i.elements()) only_i += j.contains(e) ? 0 : 1;
  EXPECT_EQ(left, only_i);
  EXPECT_EQ(right, only_i);
  EXPECT_EQ(w.s() == 0, i == j);
  ASSERT_EQ(w.letters.size(), back.letters.size());
  std::vector<Trapezium> mirrored;
  for (auto t : back.letters) mirrored.push_back({t.side == Side::L ? Side::R : Side::L, t.length, t.first_edge});
  std::vector<Trapezium> a = w.letters, b = mirrored;
  auto by_edge = [](const Trapezium& x, const Trapezium& y) { return x.first_edge < y.first_edge; };
  std::sort(a.begin(), a.end(), by_edge);
  std::sort(b.begin(), b.end(), by_edge);
  EXPECT_EQ(a, b);
  EXPECT_EQ(w.s(), back.s());

  if (is_projective(i)) return;

  const auto m = build_Dstar(i, j);
  const auto order = peak_valley_order(i);
  const std::size_t p = order.peaks.size();
  const auto kc = kernel_coefficients(i, j);
  EXPECT_EQ(*std::min_element(kc.alphas.begin(), kc.alphas.end()), 0);
  for (std::size_t c = 0; c < p; ++c) {
    const int u = order.peaks[c], v = order.valleys[c], v_next = order.valleys[(c + 1) % p];
    const int a_c = m.at(c, c)->exponent, b_c = m.at((c + 1) % p, c)->exponent;

    // lattice-placement oracle
    EXPECT_EQ(a_c, oracle::dstar_entry_exponent(i, j, v, u)) << i << " " << j << " col " << c;
    EXPECT_EQ(b_c, oracle::dstar_entry_exponent(i, j, v_next, u)) << i << " " << j << " col " << c;

    // the exponents count the word's letters on the peak-adjacent arcs
    EXPECT_EQ(a_c, letter_edges_in(w, Side::L, v, u, n));
    EXPECT_EQ(b_c, letter_edges_in(w, Side::R, u, v_next, n));

    // per-row form of the kernel relation
    const std::size_t prev = (c + p - 1) % p;
    EXPECT_EQ(a_c + kc.alphas[c], m.at(c, prev)->exponent + kc.alphas[prev]);
  }
}

class TrapeziaPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(TrapeziaPropertyTest, ExhaustivePairs) {
  const int n = GetParam();
  for (int k = 1; k < n; ++k) {
    const auto rims = all_rims(n, k);
    for (const Rim& i : rims)
      for (const Rim& j : rims) check_pair(i, j);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, TrapeziaPropertyTest, ::testing::Range(2, 9));

TEST(TrapeziaRandomTest, LargerN) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nd(9, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = nd(rng);
    std::uniform_int_distribution<int> kd(1, n - 1);
    const int k = kd(rng);
    check_pair(oracle::random_rim(rng, n, k), oracle::random_rim(rng, n, k));
  }
}

}  // namespace
}  // namespace gext
