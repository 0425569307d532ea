#pragma once

#include <cstddef>

namespace gf2e {

/// Run-time tuning knobs. None of them changes results, only speed.
struct Tuning {
  /// GF(2) products switch from M4RM to Strassen-Winograd above this many
  /// rows/columns.
  std::size_t gf2_strassen_crossover = 2048;
  /// Number of 8-bit Gray-code tables M4RM applies per pass over C.
  int m4rm_tables = 4;
  /// Newton-John tables combined per pass over the output rows.
  int nj_tables = 1;
  /// Upper bound on the bytes of one Newton-John table; wider rows are
  /// processed in column stripes.
  std::size_t nj_block_bytes = 64 * 1024;
  /// Dimension at or below which recursive algorithms over GF(2^e)
  /// (Strassen, PLE, TRSM) use their Newton-John base case, and above which
  /// multiplication updates use the sliced Karatsuba backend.
  std::size_t crossover = 512;
};

/// Process-wide tuning. The first call reads GF2E_CROSSOVER from the
/// environment to override `crossover`.
Tuning& tuning();

/// Sentinel meaning "never recurse".
inline constexpr std::size_t kNoCrossover = static_cast<std::size_t>(-1);

}  // namespace gf2e
