#include <gtest/gtest.h>

#include "gf2e/ple.hpp"
#include "gf2e/random.hpp"
#include "oracles.hpp"

using namespace gf2e;

namespace {

PackedMatrix fuzz(const FieldPtr& field, Rng& rng, int t) {
  static const std::size_t dims[] = {1, 2, 15, 16, 17, 31, 32, 33, 63, 64, 65, 100, 129};
  const std::size_t m = dims[rng.below(std::size(dims))];
  const std::size_t n = dims[rng.below(std::size(dims))];
  switch (t % 3) {
    case 0:
      return PackedMatrix::random(field, m, n, rng);
    case 1:
      return oracle::low_rank(field, m, n, rng.between(0, std::min(m, n)), rng);
    default: {
      // duplicated and zero rows
      PackedMatrix a = PackedMatrix::random(field, m, n, rng);
      for (std::size_t i = 1; i < m; i += 3) a.paste(i, 0, a.submatrix(i - 1, 0, 1, n));
      for (std::size_t i = 2; i < m; i += 5) a.paste(i, 0, PackedMatrix(field, 1, n));
      return a;
    }
  }
}

PackedMatrix product(const PackedMatrix& a, const PackedMatrix& b) {
  const int e = a.degree();
  return oracle::from_dense(a.field_ptr(),
                            oracle::matmul(oracle::to_dense(a), oracle::to_dense(b), b.cols(), e, a.field().modulus()),
                            b.cols());
}

}  // namespace

class PleByDegree : public ::testing::TestWithParam<int> {};

TEST_P(PleByDegree, RecursiveMatchesBaseCaseBitForBit) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(400 + e);
  for (int t = 0; t < 12; ++t) {
    const PackedMatrix a = fuzz(field, rng, t);
    PackedMatrix base = a;
    const PleFactors fb = nj_ple(base);
    ASSERT_EQ(reconstruct_ple(base, fb), a);
    for (std::size_t crossover : {std::size_t{1}, std::size_t{4}, std::size_t{16}, std::size_t{64}, kNoCrossover}) {
      PackedMatrix rec = a;
      const PleFactors fr = ple(rec, crossover);
      ASSERT_EQ(fr.rank, fb.rank) << "crossover=" << crossover;
      ASSERT_EQ(fr.p, fb.p);
      ASSERT_EQ(fr.q, fb.q);
      ASSERT_EQ(rec, base) << "crossover=" << crossover << " shape " << a.rows() << "x" << a.cols();
    }
  }
}

TEST_P(PleByDegree, EchelonizeMatchesScalarOracle) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(410 + e);
  for (int t = 0; t < 6; ++t) {
    const PackedMatrix a = fuzz(field, rng, t);
    const auto [rref, rank] = oracle::rref(oracle::to_dense(a), a.cols(), e, field->modulus());
    for (std::size_t crossover : {std::size_t{8}, kNoCrossover}) {
      PackedMatrix full = a;
      ASSERT_EQ(echelonize(full, true, crossover), rank);
      ASSERT_EQ(full, oracle::from_dense(field, rref, a.cols()));
      PackedMatrix half = a;
      ASSERT_EQ(echelonize(half, false, crossover), rank);
      // row echelon form: each row's leading entry is one and lies right of the previous
      std::size_t prev = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        std::size_t j = 0;
        while (j < a.cols() && half.get(i, j) == 0) ++j;
        if (i >= rank) {
          ASSERT_EQ(j, a.cols());
          continue;
        }
        ASSERT_LT(j, a.cols());
        ASSERT_EQ(half.get(i, j), 1u);
        if (i) ASSERT_GT(j, prev);
        prev = j;
      }
      // reducing it further lands on the same RREF
      nj_gauss(half, true);
      ASSERT_EQ(half, full);
    }
  }
}

TEST_P(PleByDegree, RecursiveTriangularSolves) {
  const int e = GetParam();
  const auto field = default_field(e);
  Rng rng(420 + e);
  for (std::size_t n : {1, 9, 70}) {
    const PackedMatrix u = oracle::triangular(field, n, true, rng);
    const PackedMatrix l = oracle::triangular(field, n, false, rng);
    const PackedMatrix b = PackedMatrix::random(field, n, 13, rng);
    for (std::size_t crossover : {std::size_t{2}, std::size_t{16}, kNoCrossover}) {
      PackedMatrix x = b;
      trsm_upper_left(u, x, crossover);
      ASSERT_EQ(product(u, x), b);
      x = b;
      trsm_lower_left(l, x, crossover);
      ASSERT_EQ(product(l, x), b);
      PackedMatrix unit = l;
      for (std::size_t i = 0; i < n; ++i) unit.set(i, i, 1);
      x = b;
      trsm_lower_left_unit(l, x, crossover);
      ASSERT_EQ(product(unit, x), b);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllDegrees, PleByDegree, ::testing::Range(kMinDegree, kMaxDegree + 1));

TEST(Ple, LFactorIsLowerTriangularWithPivotDiagonal) {
  const auto field = default_field(4);
  Rng rng(430);
  const PackedMatrix a = oracle::low_rank(field, 40, 50, 25, rng);
  PackedMatrix work = a;
  const PleFactors f = ple(work, 8);
  const auto [l, ech] = unpack_ple(work, f);
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = i + 1; j < l.cols(); ++j) ASSERT_EQ(l.get(i, j), 0u);
  for (std::size_t k = 0; k < f.rank; ++k) ASSERT_NE(l.get(k, k), 0u);
  for (std::size_t k = 0; k < f.rank; ++k) {
    ASSERT_EQ(ech.get(k, f.q[k]), 1u);
    for (std::size_t c = 0; c < f.q[k]; ++c) ASSERT_EQ(ech.get(k, c), 0u);
  }
}

TEST(Ple, TrsmSingularAndShapeErrors) {
  const auto field = default_field(3);
  Rng rng(440);
  PackedMatrix u = oracle::triangular(field, 5, true, rng);
  u.set(4, 4, 0);
  PackedMatrix b(field, 5, 2);
  EXPECT_THROW(trsm_upper_left(u, b, 2), SingularMatrixError);
  PackedMatrix wrong(field, 4, 2);
  EXPECT_THROW(trsm_lower_left(u, wrong, 2), std::invalid_argument);
  EXPECT_THROW(ple(b, 0), std::invalid_argument);
}

TEST(Ple, ZeroAndFullRankExtremes) {
  const auto field = default_field(9);
  PackedMatrix z(field, 70, 80);
  EXPECT_EQ(echelonize(z, true, 4), 0u);
  EXPECT_TRUE(z.is_zero());
  PackedMatrix id = PackedMatrix::identity(field, 70);
  EXPECT_EQ(echelonize(id, true, 4), 70u);
  EXPECT_EQ(id, PackedMatrix::identity(field, 70));
}
