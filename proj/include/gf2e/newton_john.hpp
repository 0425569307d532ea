#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gf2e/packed_matrix.hpp"
#include "gf2e/permutation.hpp"

namespace gf2e {

/// Raised by triangular solvers when a diagonal entry is zero.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Newton-John table: every GF(2^e) multiple of one row, indexed by the
/// multiplier, so that row(x) == x * source.
class NjTable {
 public:
  /// Table for row `row` of `b`.
  NjTable(const PackedMatrix& b, std::size_t row);

  const PackedMatrix& rows() const { return table_; }
  std::size_t source_row() const { return source_; }
  std::span<const Word> operator[](Element x) const { return table_.row(x); }

 private:
  PackedMatrix table_;
  std::size_t source_;
};

NjTable make_table(const PackedMatrix& b, std::size_t row = 0);

/// A * B with one table per row of B (table count and column striping come
/// from tuning()).
PackedMatrix nj_mul(const PackedMatrix& a, const PackedMatrix& b);

/// C += A * B with Newton-John tables.
void nj_addmul(PackedMatrix& c, const PackedMatrix& a, const PackedMatrix& b);

/// Gaussian elimination in place. `full` selects reduced row echelon form;
/// otherwise only rows below each pivot are cleared. Pivot rows are scaled
/// to a leading one. Returns the rank.
std::size_t nj_gauss(PackedMatrix& a, bool full);

/// Result of an in-place PLE decomposition. The host matrix holds L on and
/// below the diagonal of its first `rank` columns (diagonal = pivot values)
/// and the rows of E, whose leading ones are implicit, above.
struct PleFactors {
  PermVector p;  // row swaps
  PermVector q;  // pivot columns, as column swaps
  std::size_t rank = 0;
};

/// Newton-John based PLE decomposition, in place.
PleFactors nj_ple(PackedMatrix& a);

/// Solves U X = B for upper triangular U with nonzero diagonal; X replaces B.
/// Throws SingularMatrixError naming the first zero diagonal entry found.
void nj_trsm_upper_left(const PackedMatrix& u, PackedMatrix& b);

/// Solves L X = B using only the lower triangle of `l` (the diagonal is
/// taken as one when `unit_diagonal`); X replaces B.
void nj_trsm_lower_left(const PackedMatrix& l, PackedMatrix& b, bool unit_diagonal);

/// Splits the in-place encoding into L (m x r) and E (r x n).
std::pair<PackedMatrix, PackedMatrix> unpack_ple(const PackedMatrix& a, const PleFactors& f);

/// P * L * E, i.e. the matrix the decomposition was computed from.
PackedMatrix reconstruct_ple(const PackedMatrix& a, const PleFactors& f);

namespace detail {

/// Fills `table` (2^e rows of `nwords` words, contiguous) with all multiples
/// of the packed words `src`: e scalings by alpha, then 2^e - 1 Gray-code
/// row additions. Updates op_counters().
void fill_nj_table(const Field& field, const Word* src, std::size_t nwords, Word* table);

}  // namespace detail

}  // namespace gf2e
