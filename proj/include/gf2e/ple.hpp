#pragma once

#include <cstddef>

#include "gf2e/newton_john.hpp"
#include "gf2e/packed_matrix.hpp"
#include "gf2e/permutation.hpp"
#include "gf2e/tuning.hpp"

namespace gf2e {

/// Recursive PLE decomposition: split the columns in half, decompose the left
/// half, solve for the top-right block, update the Schur complement with a
/// matrix product and recurse on it. Blocks with at most `crossover` columns
/// (or rows) use nj_ple. The in-place result is identical to nj_ple's for
/// every crossover.
PleFactors ple(PackedMatrix& a, std::size_t crossover = tuning().crossover);

/// B <- L^-1 B for unit lower triangular L; only the strict lower triangle
/// of `l` is read.
void trsm_lower_left_unit(const PackedMatrix& l, PackedMatrix& b, std::size_t crossover = tuning().crossover);

/// B <- L^-1 B reading the lower triangle of `l` including its diagonal.
void trsm_lower_left(const PackedMatrix& l, PackedMatrix& b, std::size_t crossover = tuning().crossover);

/// B <- U^-1 B for upper triangular U with nonzero diagonal.
void trsm_upper_left(const PackedMatrix& u, PackedMatrix& b, std::size_t crossover = tuning().crossover);

/// (Reduced) row echelon form in place via PLE. Returns the rank.
std::size_t echelonize(PackedMatrix& a, bool full, std::size_t crossover = tuning().crossover);

}  // namespace gf2e
