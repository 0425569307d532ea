#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gf2e/bit_matrix.hpp"
#include "gf2e/counters.hpp"
#include "gf2e/packed_matrix.hpp"
#include "gf2e/sliced_matrix.hpp"

namespace gf2e {

using MulCounters = OpCounters;

/// Textbook multiplication: every entry of A scales a row of B through the
/// field table. Used as the reference backend.
PackedMatrix cubic_mul(const PackedMatrix& a, const PackedMatrix& b);

/// Strassen-Winograd over packed matrices with the Newton-John product as
/// base case. Odd trailing rows/columns are peeled off and fixed up with
/// base-case products; recursion stops once a dimension is <= crossover.
PackedMatrix strassen_nj_mul(const PackedMatrix& a, const PackedMatrix& b, std::size_t crossover);

/// One product of the flattened Karatsuba schedule: the sum of the slices
/// named by `operands` (bit k = slice k) of A times the same sum over B,
/// added into every product coefficient named by `outputs` (bit d = x^d).
struct KaratsubaTerm {
  std::uint32_t operands = 0;
  std::uint32_t outputs = 0;
};

/// Balanced recursive Karatsuba split for polynomials with e coefficients
/// (three-way formula for three coefficients).
const std::vector<KaratsubaTerm>& karatsuba_schedule(int degree);

/// A * B on sliced matrices: Karatsuba product of the slice polynomials
/// (2e - 1 coefficients) followed by reduce_mod_f. Uses at most three GF(2)
/// temporaries; product and temporary counts go to op_counters().
SlicedMatrix karatsuba_mul(const SlicedMatrix& a, const SlicedMatrix& b);

/// Folds 2e - 1 product coefficients down to e modulo the field polynomial:
/// coefficient d >= e is added into d - e + k for each nonzero low
/// coefficient k of f.
std::vector<BitMatrix> reduce_mod_f(std::vector<BitMatrix> coefficients, const Field& field);

/// GF(2) products karatsuba_mul issues for one multiplication in GF(2^e),
/// measured on a probe product.
std::size_t count_products(int degree);

enum class MulBackend { kCubic, kNewtonJohn, kStrassen, kKaratsuba, kAuto };

MulBackend parse_backend(std::string_view name);
std::string_view backend_name(MulBackend backend);

/// Dispatching product. kAuto uses Newton-John when every dimension is at
/// most `crossover` and Karatsuba on sliced copies otherwise.
PackedMatrix multiply(const PackedMatrix& a, const PackedMatrix& b, MulBackend backend, std::size_t crossover);

}  // namespace gf2e
