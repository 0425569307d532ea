#include <gtest/gtest.h>

#include "gf2e/random.hpp"
#include "gf2e/sliced_matrix.hpp"
#include "oracles.hpp"

using namespace gf2e;

namespace {

BitMatrix bits(std::initializer_list<std::initializer_list<int>> rows) {
  BitMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (int v : r) m.set(i, j++, v != 0);
    ++i;
  }
  return m;
}

}  // namespace

// 2x2 matrix over GF(8) with entries written as bit patterns of
// polynomials in x: [[x^2 + 1, x], [x + 1, 1]].
TEST(Sliced, TwoByTwoGf8Fixture) {
  const auto field = default_field(3);
  PackedMatrix a(field, 2, 2);
  a.set(0, 0, 5);
  a.set(0, 1, 2);
  a.set(1, 0, 3);
  a.set(1, 1, 1);
  const SlicedMatrix s = slice(a);
  EXPECT_EQ(s.slice(0), bits({{1, 0}, {1, 1}}));
  EXPECT_EQ(s.slice(1), bits({{0, 1}, {1, 0}}));
  EXPECT_EQ(s.slice(2), bits({{1, 0}, {0, 0}}));
  EXPECT_EQ(cling(s), a);
}

class SlicedByDegree : public ::testing::TestWithParam<int> {};

TEST_P(SlicedByDegree, RoundTripsAndEntryAccess) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(100 + e);
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {3, 63}, {64, 64}, {65, 129}, {17, 200}}) {
    const PackedMatrix a = PackedMatrix::random(field, m, n, rng);
    const SlicedMatrix s = slice(a);
    ASSERT_EQ(cling(s), a);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(s.get(i, j), a.get(i, j));
        for (int k = 0; k < e; ++k) ASSERT_EQ(s.slice(k).get(i, j), ((a.get(i, j) >> k) & 1u) != 0);
      }
    ASSERT_EQ(slice(cling(s)), s);
  }
}

TEST_P(SlicedByDegree, AdditionCommutesWithSlicing) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(110 + e);
  const PackedMatrix a = PackedMatrix::random(field, 20, 90, rng);
  const PackedMatrix b = PackedMatrix::random(field, 20, 90, rng);
  EXPECT_EQ(add(slice(a), slice(b)), slice(add(a, b)));
}

TEST_P(SlicedByDegree, AlphaAndScalarMatchOracle) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(120 + e);
  const PackedMatrix a = PackedMatrix::random(field, 7, 70, rng);
  const SlicedMatrix alpha_a = mul_by_alpha(slice(a));
  const Element c = static_cast<Element>(rng.between(1, field->order() - 1));
  const SlicedMatrix c_a = scalar_mul(slice(a), c);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 70; ++j) {
      ASSERT_EQ(alpha_a.get(i, j), oracle::mul(2, a.get(i, j), e, field->modulus()));
      ASSERT_EQ(c_a.get(i, j), oracle::mul(c, a.get(i, j), e, field->modulus()));
    }
}

INSTANTIATE_TEST_SUITE_P(AllDegrees, SlicedByDegree, ::testing::Range(kMinDegree, kMaxDegree + 1));

TEST(Sliced, ConstructorValidatesSlices) {
  const auto field = default_field(3);
  std::vector<BitMatrix> two(2, BitMatrix(2, 2));
  EXPECT_THROW(SlicedMatrix(field, two), std::invalid_argument);
  std::vector<BitMatrix> ragged{BitMatrix(2, 2), BitMatrix(2, 3), BitMatrix(2, 2)};
  EXPECT_THROW(SlicedMatrix(field, ragged), std::invalid_argument);
}
