#include <gtest/gtest.h>

#include "gf2e/counters.hpp"
#include "gf2e/newton_john.hpp"
#include "gf2e/random.hpp"
#include "gf2e/tuning.hpp"
#include "oracles.hpp"

using namespace gf2e;

class NjByDegree : public ::testing::TestWithParam<int> {};

TEST_P(NjByDegree, TableRowsAreScalarMultiples) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(200 + e);
  const PackedMatrix b = PackedMatrix::random(field, 3, 45, rng);
  op_counters().reset();
  const NjTable t = make_table(b, 2);
  EXPECT_EQ(op_counters().table_scalar_rows, static_cast<std::uint64_t>(e));
  EXPECT_EQ(op_counters().table_row_adds, (std::uint64_t{1} << e) - 1);
  EXPECT_EQ(op_counters().tables_built, 1u);
  ASSERT_EQ(t.rows().rows(), std::size_t{1} << e);
  for (Element x = 0; x < field->order(); ++x)
    for (std::size_t j = 0; j < b.cols(); ++j)
      ASSERT_EQ(t.rows().get(x, j), oracle::mul(x, b.get(2, j), e, field->modulus()));
}

TEST_P(NjByDegree, ProductMatchesOracle) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(210 + e);
  for (auto [m, k, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 1, 1}, {5, 33, 64}, {40, 17, 129}}) {
    const PackedMatrix a = PackedMatrix::random(field, m, k, rng);
    const PackedMatrix b = PackedMatrix::random(field, k, n, rng);
    const auto expected = oracle::matmul(oracle::to_dense(a), oracle::to_dense(b), n, e, field->modulus());
    ASSERT_EQ(nj_mul(a, b), oracle::from_dense(field, expected, n));
  }
}

TEST_P(NjByDegree, GaussMatchesScalarOracle) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(220 + e);
  for (int t = 0; t < 6; ++t) {
    const std::size_t m = rng.between(1, 40), n = rng.between(1, 40);
    const PackedMatrix a = t % 2 ? oracle::low_rank(field, m, n, rng.between(0, 6), rng)
                                 : PackedMatrix::random(field, m, n, rng);
    const auto [rref, rank] = oracle::rref(oracle::to_dense(a), n, e, field->modulus());
    PackedMatrix full = a;
    ASSERT_EQ(nj_gauss(full, true), rank);
    ASSERT_EQ(full, oracle::from_dense(field, rref, n));
    PackedMatrix half = a;
    ASSERT_EQ(nj_gauss(half, false), rank);
    // same pivots: reducing the upper echelon form fully gives the same RREF
    nj_gauss(half, true);
    ASSERT_EQ(half, full);
  }
}

TEST_P(NjByDegree, PleReconstructs) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(230 + e);
  for (int t = 0; t < 8; ++t) {
    const std::size_t m = rng.between(1, 70), n = rng.between(1, 70);
    const PackedMatrix a = t % 2 ? oracle::low_rank(field, m, n, rng.between(0, 10), rng)
                                 : PackedMatrix::random(field, m, n, rng);
    PackedMatrix work = a;
    const PleFactors f = nj_ple(work);
    f.p.validate(m);
    ASSERT_EQ(reconstruct_ple(work, f), a);
    const auto [rref, rank] = oracle::rref(oracle::to_dense(a), n, e, field->modulus());
    ASSERT_EQ(f.rank, rank);
    // E is in row echelon form with strictly increasing pivots
    for (std::size_t k = 1; k < f.rank; ++k) ASSERT_LT(f.q[k - 1], f.q[k]);
  }
}

TEST_P(NjByDegree, TriangularSolves) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(240 + e);
  const std::size_t n = 37, cols = 21;
  const PackedMatrix u = oracle::triangular(field, n, true, rng);
  const PackedMatrix l = oracle::triangular(field, n, false, rng);
  const PackedMatrix b = PackedMatrix::random(field, n, cols, rng);

  PackedMatrix x = b;
  nj_trsm_upper_left(u, x);
  EXPECT_EQ(oracle::from_dense(field, oracle::matmul(oracle::to_dense(u), oracle::to_dense(x), cols, e, field->modulus()), cols), b);

  x = b;
  nj_trsm_lower_left(l, x, false);
  EXPECT_EQ(oracle::from_dense(field, oracle::matmul(oracle::to_dense(l), oracle::to_dense(x), cols, e, field->modulus()), cols), b);

  // unit variant ignores the stored diagonal
  PackedMatrix unit = l;
  for (std::size_t i = 0; i < n; ++i) unit.set(i, i, 1);
  PackedMatrix junk_diag = l;
  x = b;
  nj_trsm_lower_left(junk_diag, x, true);
  PackedMatrix y = b;
  nj_trsm_lower_left(unit, y, false);
  EXPECT_EQ(x, y);
}

INSTANTIATE_TEST_SUITE_P(AllDegrees, NjByDegree, ::testing::Range(kMinDegree, kMaxDegree + 1));

TEST(NewtonJohn, SingularTriangleReportsFirstZeroDiagonal) {
  const auto field = default_field(4);
  Rng rng(250);
  PackedMatrix u = oracle::triangular(field, 10, true, rng);
  u.set(6, 6, 0);
  u.set(3, 3, 0);
  PackedMatrix b = PackedMatrix::random(field, 10, 4, rng);
  const PackedMatrix before = b;
  try {
    nj_trsm_upper_left(u, b);
    FAIL() << "expected SingularMatrixError";
  } catch (const SingularMatrixError& ex) {
    EXPECT_EQ(ex.index(), 3u);
  }
  EXPECT_EQ(b, before);
}

TEST(NewtonJohn, StripedTablesGiveSameProduct) {
  const auto field = default_field(8);
  Rng rng(260);
  const PackedMatrix a = PackedMatrix::random(field, 30, 50, rng);
  const PackedMatrix b = PackedMatrix::random(field, 50, 300, rng);
  const PackedMatrix reference = nj_mul(a, b);
  Tuning saved = tuning();
  tuning().nj_block_bytes = 256 * 8 * 3;  // three words per stripe
  tuning().nj_tables = 3;
  const PackedMatrix striped = nj_mul(a, b);
  tuning() = saved;
  EXPECT_EQ(striped, reference);
}

TEST(NewtonJohn, ZeroAndIdentityInputs) {
  const auto field = default_field(6);
  Rng rng(270);
  PackedMatrix z(field, 12, 9);
  EXPECT_EQ(nj_gauss(z, true), 0u);
  PackedMatrix id = PackedMatrix::identity(field, 9);
  PackedMatrix work = id;
  const PleFactors f = nj_ple(work);
  EXPECT_EQ(f.rank, 9u);
  EXPECT_EQ(work, id);
  const PackedMatrix a = PackedMatrix::random(field, 9, 9, rng);
  EXPECT_EQ(nj_mul(id, a), a);
}
