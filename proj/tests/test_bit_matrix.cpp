#include <gtest/gtest.h>

#include "gf2e/bit_matrix.hpp"
#include "gf2e/counters.hpp"
#include "gf2e/random.hpp"

using namespace gf2e;

namespace {

BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool s = false;
      for (std::size_t l = 0; l < a.cols(); ++l) s ^= a.get(i, l) && b.get(l, j);
      c.set(i, j, s);
    }
  return c;
}

bool padding_clear(const BitMatrix& m) {
  if (m.cols() % kWordBits == 0) return true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).back() & ~tail_mask(m.cols())) return false;
  }
  return true;
}

}  // namespace

class Gf2Mul : public ::testing::TestWithParam<Gf2MulStrategy> {};

TEST_P(Gf2Mul, MatchesNaiveAcrossWordBoundaries) {
  Rng rng(7);
  for (std::size_t m : {1, 63, 64, 65, 129})
    for (std::size_t k : {1, 64, 127, 130})
      for (std::size_t n : {5, 64, 65, 128, 200}) {
        const BitMatrix a = BitMatrix::random(m, k, rng);
        const BitMatrix b = BitMatrix::random(k, n, rng);
        const BitMatrix c = mul(a, b, GetParam());
        ASSERT_EQ(c, naive_mul(a, b)) << m << "x" << k << "x" << n;
        ASSERT_TRUE(padding_clear(c));
      }
}

TEST_P(Gf2Mul, AddmulAccumulates) {
  Rng rng(8);
  const BitMatrix a = BitMatrix::random(150, 170, rng);
  const BitMatrix b = BitMatrix::random(170, 140, rng);
  BitMatrix c = BitMatrix::random(150, 140, rng);
  const BitMatrix expected = add(c, naive_mul(a, b));
  addmul(c.view(), a.view(), b.view(), GetParam());
  EXPECT_EQ(c, expected);
}

INSTANTIATE_TEST_SUITE_P(Strategies, Gf2Mul,
                         ::testing::Values(Gf2MulStrategy::kAuto, Gf2MulStrategy::kCubic, Gf2MulStrategy::kM4rm,
                                           Gf2MulStrategy::kStrassen));

TEST(BitMatrix, StrassenOnLargerOperandsAgreesWithM4rm) {
  Rng rng(9);
  const BitMatrix a = BitMatrix::random(700, 650, rng);
  const BitMatrix b = BitMatrix::random(650, 600, rng);
  EXPECT_EQ(mul(a, b, Gf2MulStrategy::kStrassen), mul(a, b, Gf2MulStrategy::kM4rm));
}

TEST(BitMatrix, ProductIsAssociative) {
  Rng rng(10);
  const BitMatrix a = BitMatrix::random(90, 100, rng);
  const BitMatrix b = BitMatrix::random(100, 70, rng);
  const BitMatrix c = BitMatrix::random(70, 110, rng);
  EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
}

TEST(BitMatrix, WindowsWriteOnlyTheirColumns) {
  Rng rng(11);
  BitMatrix target = BitMatrix::random(100, 200, rng);
  const BitMatrix before = target;
  const BitMatrix a = BitMatrix::random(40, 30, rng);
  const BitMatrix b = BitMatrix::random(30, 70, rng);
  BitView w = target.window(10, 64, 40, 70);
  clear(w);
  addmul(w, a.view(), b.view());
  const BitMatrix prod = naive_mul(a, b);
  for (std::size_t i = 0; i < target.rows(); ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) {
      const bool inside = i >= 10 && i < 50 && j >= 64 && j < 134;
      ASSERT_EQ(target.get(i, j), inside ? prod.get(i - 10, j - 64) : before.get(i, j));
    }
}

TEST(BitMatrix, UnalignedWindowRejected) {
  BitMatrix m(8, 200);
  EXPECT_THROW(m.window(0, 3, 4, 4), std::invalid_argument);
  EXPECT_THROW(m.window(0, 128, 4, 100), std::out_of_range);
}

TEST(BitMatrix, CopyWindowAndPasteRoundTrip) {
  Rng rng(12);
  BitMatrix m = BitMatrix::random(70, 190, rng);
  const BitMatrix block = m.copy_window(3, 37, 50, 101);
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 101; ++j) ASSERT_EQ(block.get(i, j), m.get(i + 3, j + 37));
  EXPECT_TRUE(padding_clear(block));
  BitMatrix copy = m;
  copy.paste(3, 37, block);
  EXPECT_EQ(copy, m);
  BitMatrix zero(70, 190);
  zero.paste(3, 37, block);
  EXPECT_EQ(zero.copy_window(3, 37, 50, 101), block);
  zero.paste(3, 37, BitMatrix(50, 101));
  EXPECT_TRUE(zero.is_zero());
}

TEST(BitMatrix, SwapsAndIdentity) {
  Rng rng(13);
  BitMatrix m = BitMatrix::random(5, 130, rng);
  const BitMatrix orig = m;
  m.col_swap(1, 129);
  m.row_swap(0, 4);
  for (std::size_t j = 0; j < 130; ++j) {
    const std::size_t src = j == 1 ? 129 : j == 129 ? 1 : j;
    EXPECT_EQ(m.get(0, j), orig.get(4, src));
    EXPECT_EQ(m.get(4, j), orig.get(0, src));
  }
  const BitMatrix id = BitMatrix::identity(130);
  EXPECT_EQ(mul(orig, id), orig);
}

TEST(BitMatrix, LinearCombinationsUseGrayCode) {
  Rng rng(14);
  for (std::size_t k : {1, 3, 8}) {
    const BitMatrix rows = BitMatrix::random(k, 150, rng);
    op_counters().reset();
    const BitMatrix table = linear_combinations(rows.view());
    EXPECT_EQ(op_counters().combination_row_adds, (std::uint64_t{1} << k) - 1);
    ASSERT_EQ(table.rows(), std::size_t{1} << k);
    for (std::size_t x = 0; x < table.rows(); ++x) {
      BitMatrix expected(1, 150);
      for (std::size_t i = 0; i < k; ++i) {
        if ((x >> i) & 1u) expected += rows.copy_window(i, 0, 1, 150);
      }
      ASSERT_EQ(table.copy_window(x, 0, 1, 150), expected) << "x=" << x;
    }
  }
}

TEST(BitMatrix, ShapeMismatchThrows) {
  BitMatrix a(3, 4), b(5, 6);
  EXPECT_THROW(mul(a, b), std::invalid_argument);
  EXPECT_THROW(a += b, std::invalid_argument);
}
