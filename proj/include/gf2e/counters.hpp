#pragma once

#include <algorithm>
#include <cstdint>

namespace gf2e {

/// Operation counters used to check the cost statements of the table and
/// Karatsuba algorithms. One instance per thread; callers reset between
/// measurements.
struct OpCounters {
  /// Products of two GF(2) matrices issued by the sliced multiplication.
  std::uint64_t gf2_muls = 0;
  /// Additions of whole GF(2) matrices (slice-level adds in Karatsuba).
  std::uint64_t gf2_adds = 0;
  /// Rows scaled by alpha^k while building Newton-John tables.
  std::uint64_t table_scalar_rows = 0;
  /// Row additions performed while filling Newton-John tables.
  std::uint64_t table_row_adds = 0;
  /// Newton-John tables built.
  std::uint64_t tables_built = 0;
  /// Gray-code row additions inside GF(2) linear_combinations().
  std::uint64_t combination_row_adds = 0;
  /// Largest number of live GF(2) temporaries seen in one Karatsuba call.
  std::uint64_t temp_high_water = 0;

  void reset() { *this = OpCounters{}; }

  void note_temporaries(std::uint64_t live) { temp_high_water = std::max(temp_high_water, live); }
};

/// Counters of the calling thread.
OpCounters& op_counters();

}  // namespace gf2e
