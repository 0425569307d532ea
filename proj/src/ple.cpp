#include "gf2e/ple.hpp"

#include <algorithm>

#include "gf2e/poly_mul.hpp"

namespace gf2e {

namespace {

// Column split that keeps the left block a whole number of words when the
// matrix is wide enough, so the block copies are plain word copies.
std::size_t split_columns(const PackedMatrix& a) {
  const std::size_t half = a.cols() / 2;
  const std::size_t per_word = a.per_word();
  return half >= per_word ? half - half % per_word : half;
}

void check_square_system(const PackedMatrix& t, const PackedMatrix& b) {
  check_compatible(t, b);
  if (t.rows() != t.cols() || b.rows() != t.rows()) throw std::invalid_argument("trsm: dimension mismatch");
}

void check_diagonal(const PackedMatrix& t) {
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.at(i, i) == 0) throw SingularMatrixError(i);
  }
}

void trsm_upper_rec(const PackedMatrix& u, PackedMatrix& b, std::size_t crossover) {
  const std::size_t m = u.rows();
  if (m <= crossover || m < 2) {
    nj_trsm_upper_left(u, b);
    return;
  }
  const std::size_t m1 = m / 2;
  const std::size_t n = b.cols();
  PackedMatrix b1 = b.submatrix(m1, 0, m - m1, n);
  trsm_upper_rec(u.submatrix(m1, m1, m - m1, m - m1), b1, crossover);
  PackedMatrix b0 = b.submatrix(0, 0, m1, n);
  b0 += multiply(u.submatrix(0, m1, m1, m - m1), b1, MulBackend::kAuto, crossover);
  trsm_upper_rec(u.submatrix(0, 0, m1, m1), b0, crossover);
  b.paste(0, 0, b0);
  b.paste(m1, 0, b1);
}

void trsm_lower_rec(const PackedMatrix& l, PackedMatrix& b, bool unit, std::size_t crossover) {
  const std::size_t m = l.rows();
  if (m <= crossover || m < 2) {
    nj_trsm_lower_left(l, b, unit);
    return;
  }
  const std::size_t m1 = m / 2;
  const std::size_t n = b.cols();
  PackedMatrix b0 = b.submatrix(0, 0, m1, n);
  trsm_lower_rec(l.submatrix(0, 0, m1, m1), b0, unit, crossover);
  PackedMatrix b1 = b.submatrix(m1, 0, m - m1, n);
  b1 += multiply(l.submatrix(m1, 0, m - m1, m1), b0, MulBackend::kAuto, crossover);
  trsm_lower_rec(l.submatrix(m1, m1, m - m1, m - m1), b1, unit, crossover);
  b.paste(0, 0, b0);
  b.paste(m1, 0, b1);
}

PleFactors ple_rec(PackedMatrix& a, std::size_t crossover) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n <= crossover || m <= crossover || n < 2) return nj_ple(a);

  const std::size_t n1 = split_columns(a);
  PackedMatrix left = a.submatrix(0, 0, m, n1);
  PackedMatrix right = a.submatrix(0, n1, m, n - n1);

  const PleFactors f1 = ple_rec(left, crossover);
  const std::size_t r1 = f1.rank;
  apply_perm_rows(right, f1.p, PermDirection::kForward);

  if (r1 > 0) {
    // E12 = L11^-1 A12, then A22 <- A22 - L21 E12
    PackedMatrix top = right.submatrix(0, 0, r1, n - n1);
    trsm_lower_rec(left.submatrix(0, 0, r1, r1), top, false, crossover);
    right.paste(0, 0, top);
    if (r1 < m) {
      PackedMatrix schur = right.submatrix(r1, 0, m - r1, n - n1);
      schur += multiply(left.submatrix(r1, 0, m - r1, r1), top, MulBackend::kAuto, crossover);
      right.paste(r1, 0, schur);
    }
  }

  PleFactors f{PermVector(std::min(m, n)), PermVector(std::min(m, n)), r1};
  for (std::size_t k = 0; k < r1; ++k) {
    f.p[k] = f1.p[k];
    f.q[k] = f1.q[k];
  }

  std::size_t r2 = 0;
  if (r1 < m) {
    PackedMatrix schur = right.submatrix(r1, 0, m - r1, n - n1);
    const PleFactors f2 = ple_rec(schur, crossover);
    r2 = f2.rank;
    right.paste(r1, 0, schur);
    for (std::size_t t = 0; t < f2.p.size(); ++t) left.row_swap(r1 + t, r1 + f2.p[t]);
    for (std::size_t t = 0; t < r2; ++t) {
      f.p[r1 + t] = r1 + f2.p[t];
      f.q[r1 + t] = n1 + f2.q[t];
    }
  }

  a.paste(0, 0, left);
  a.paste(0, n1, right);
  // move the Schur complement's L next to the left block's L
  for (std::size_t t = 0; t < r2; ++t) a.col_swap(r1 + t, n1 + t, r1 + t);
  f.rank = r1 + r2;
  return f;
}

}  // namespace

PleFactors ple(PackedMatrix& a, std::size_t crossover) {
  if (crossover == 0) throw std::invalid_argument("crossover must be at least 1");
  return ple_rec(a, crossover);
}

void trsm_lower_left_unit(const PackedMatrix& l, PackedMatrix& b, std::size_t crossover) {
  check_square_system(l, b);
  if (crossover == 0) throw std::invalid_argument("crossover must be at least 1");
  trsm_lower_rec(l, b, true, crossover);
}

void trsm_lower_left(const PackedMatrix& l, PackedMatrix& b, std::size_t crossover) {
  check_square_system(l, b);
  if (crossover == 0) throw std::invalid_argument("crossover must be at least 1");
  check_diagonal(l);
  trsm_lower_rec(l, b, false, crossover);
}

void trsm_upper_left(const PackedMatrix& u, PackedMatrix& b, std::size_t crossover) {
  check_square_system(u, b);
  if (crossover == 0) throw std::invalid_argument("crossover must be at least 1");
  check_diagonal(u);
  trsm_upper_rec(u, b, crossover);
}

std::size_t echelonize(PackedMatrix& a, bool full, std::size_t crossover) {
  const PleFactors f = ple(a, crossover);
  const std::size_t r = f.rank;
  const std::size_t n = a.cols();

  // keep only E: clear L and the structural zeros, restore the leading ones
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t c = 0; c < f.q[k]; ++c) a.put(k, c, 0);
    a.put(k, f.q[k], 1);
  }
  for (std::size_t i = r; i < a.rows(); ++i) std::fill(a.row(i).begin(), a.row(i).end(), Word{0});

  if (full && r > 0) {
    PermVector pivots(std::vector<std::size_t>(f.q.entries().begin(), f.q.entries().begin() + static_cast<std::ptrdiff_t>(r)));
    PackedMatrix top = a.submatrix(0, 0, r, n);
    apply_perm_cols(top, pivots, PermDirection::kForward);
    // top = [U | N] with U unit upper triangular
    if (n > r) {
      PackedMatrix rest = top.submatrix(0, r, r, n - r);
      trsm_upper_rec(top.submatrix(0, 0, r, r), rest, crossover);
      top.paste(0, r, rest);
    }
    top.paste(0, 0, PackedMatrix::identity(a.field_ptr(), r));
    apply_perm_cols(top, pivots, PermDirection::kBackward);
    a.paste(0, 0, top);
  }
  return r;
}

}  // namespace gf2e
