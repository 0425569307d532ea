#include "gf2e/poly_mul.hpp"

#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "gf2e/detail/winograd.hpp"
#include "gf2e/newton_john.hpp"
#include "gf2e/random.hpp"
#include "gf2e/tuning.hpp"

namespace gf2e {

namespace {

void check_conformable(const PackedMatrix& a, const PackedMatrix& b) {
  check_compatible(a, b);
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
  }
}

// Symbolic Karatsuba on a list of operand masks. Output degrees are
// relative to the start of the list and toggle (characteristic two).
std::vector<KaratsubaTerm> karatsuba_terms(const std::vector<std::uint32_t>& ops) {
  const std::size_t k = ops.size();
  if (k == 1) return {{ops[0], 1u}};
  if (k == 2) {
    // (a0 + a1 x)(b0 + b1 x) = P0 + (P01 + P0 + P1) x + P1 x^2
    return {{ops[0], 0b011u}, {ops[1], 0b110u}, {ops[0] ^ ops[1], 0b010u}};
  }
  if (k == 3) {
    // C1 = P01 + P0 + P1, C2 = P02 + P0 + P2 + P1, C3 = P12 + P1 + P2
    return {{ops[0], 0b00111u},          {ops[1], 0b01110u},          {ops[2], 0b11100u},
            {ops[0] ^ ops[1], 0b00010u}, {ops[0] ^ ops[2], 0b00100u}, {ops[1] ^ ops[2], 0b01000u}};
  }
  const std::size_t lo = (k + 1) / 2;
  const std::vector<std::uint32_t> low(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(lo));
  const std::vector<std::uint32_t> high(ops.begin() + static_cast<std::ptrdiff_t>(lo), ops.end());
  std::vector<std::uint32_t> mid = low;
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] ^= high[i];

  // L + x^lo (M + L + H) + x^(2 lo) H
  std::vector<KaratsubaTerm> out;
  for (auto t : karatsuba_terms(low)) out.push_back({t.operands, t.outputs ^ (t.outputs << lo)});
  for (auto t : karatsuba_terms(high)) out.push_back({t.operands, (t.outputs << lo) ^ (t.outputs << (2 * lo))});
  for (auto t : karatsuba_terms(mid)) out.push_back({t.operands, t.outputs << lo});
  return out;
}

BitMatrix slice_sum(const SlicedMatrix& m, std::uint32_t mask, MulCounters& counters) {
  BitMatrix sum;
  bool first = true;
  for (int k = 0; k < m.degree(); ++k) {
    if (!((mask >> k) & 1u)) continue;
    if (first) {
      sum = m.slice(k);
      first = false;
    } else {
      sum += m.slice(k);
      ++counters.gf2_adds;
    }
  }
  return sum;
}

}  // namespace

PackedMatrix cubic_mul(const PackedMatrix& a, const PackedMatrix& b) {
  check_conformable(a, b);
  const Field& field = a.field();
  PackedMatrix c(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Element x = a.at(i, l);
      if (x == 0) continue;
      const std::uint16_t* mr = field.mul_row(x);
      for (std::size_t j = 0; j < b.cols(); ++j) c.put(i, j, c.at(i, j) ^ mr[b.at(l, j)]);
    }
  }
  return c;
}

PackedMatrix strassen_nj_mul(const PackedMatrix& a, const PackedMatrix& b, std::size_t crossover) {
  check_conformable(a, b);
  if (crossover == 0) throw std::invalid_argument("crossover must be at least 1");
  const std::size_t m = a.rows(), inner = a.cols(), n = b.cols();
  if (m <= crossover || inner <= crossover || n <= crossover) return nj_mul(a, b);

  const std::size_t m2 = m / 2, k2 = inner / 2, n2 = n / 2;
  const auto quads = detail::winograd_step(
      a.submatrix(0, 0, m2, k2), a.submatrix(0, k2, m2, k2), a.submatrix(m2, 0, m2, k2),
      a.submatrix(m2, k2, m2, k2), b.submatrix(0, 0, k2, n2), b.submatrix(0, n2, k2, n2),
      b.submatrix(k2, 0, k2, n2), b.submatrix(k2, n2, k2, n2),
      [crossover](const PackedMatrix& x, const PackedMatrix& y) { return strassen_nj_mul(x, y, crossover); });

  PackedMatrix core(a.field_ptr(), 2 * m2, 2 * n2);
  core.paste(0, 0, quads[0]);
  core.paste(0, n2, quads[1]);
  core.paste(m2, 0, quads[2]);
  core.paste(m2, n2, quads[3]);
  if (inner % 2) {
    nj_addmul(core, a.submatrix(0, inner - 1, 2 * m2, 1), b.submatrix(inner - 1, 0, 1, 2 * n2));
  }

  PackedMatrix c(a.field_ptr(), m, n);
  c.paste(0, 0, core);
  if (n % 2) c.paste(0, n - 1, nj_mul(a, b.submatrix(0, n - 1, inner, 1)));
  if (m % 2) c.paste(m - 1, 0, nj_mul(a.submatrix(m - 1, 0, 1, inner), b.submatrix(0, 0, inner, 2 * n2)));
  return c;
}

const std::vector<KaratsubaTerm>& karatsuba_schedule(int degree) {
  if (degree < kMinDegree || degree > kMaxDegree) throw FieldError("karatsuba_schedule: degree out of range");
  static std::array<std::vector<KaratsubaTerm>, kMaxDegree + 1> cache;
  static std::array<std::once_flag, kMaxDegree + 1> once;
  const auto idx = static_cast<std::size_t>(degree);
  std::call_once(once[idx], [&] {
    std::vector<std::uint32_t> ops(idx);
    for (std::size_t k = 0; k < idx; ++k) ops[k] = 1u << k;
    cache[idx] = karatsuba_terms(ops);
  });
  return cache[idx];
}

std::vector<BitMatrix> reduce_mod_f(std::vector<BitMatrix> coefficients, const Field& field) {
  const int e = field.degree();
  if (coefficients.size() != static_cast<std::size_t>(2 * e - 1)) {
    throw std::invalid_argument("reduce_mod_f expects 2e - 1 coefficients");
  }
  const std::uint32_t f = field.modulus();
  for (int d = 2 * e - 2; d >= e; --d) {
    const BitMatrix& top = coefficients[static_cast<std::size_t>(d)];
    for (int k = 0; k < e; ++k) {
      if ((f >> k) & 1u) coefficients[static_cast<std::size_t>(d - e + k)] += top;
    }
  }
  coefficients.resize(static_cast<std::size_t>(e));
  return coefficients;
}

SlicedMatrix karatsuba_mul(const SlicedMatrix& a, const SlicedMatrix& b) {
  if (a.field().modulus() != b.field().modulus()) throw std::invalid_argument("matrices are defined over different fields");
  if (a.cols() != b.rows()) throw std::invalid_argument("karatsuba_mul: inner dimensions differ");
  const int e = a.degree();
  const std::size_t m = a.rows(), n = b.cols();
  auto& counters = op_counters();

  std::vector<BitMatrix> coeffs(static_cast<std::size_t>(2 * e - 1), BitMatrix(m, n));
  std::optional<BitMatrix> product;  // the third temporary, only when a term feeds several outputs
  std::uint64_t live = 0;
  for (const KaratsubaTerm& term : karatsuba_schedule(e)) {
    const bool single = std::has_single_bit(term.operands);
    // sums of several slices live in the first two temporaries
    std::optional<BitMatrix> sum_a, sum_b;
    if (!single) {
      sum_a = slice_sum(a, term.operands, counters);
      sum_b = slice_sum(b, term.operands, counters);
    }
    const int k0 = std::countr_zero(term.operands);
    const BitMatrix& lhs = single ? a.slice(k0) : *sum_a;
    const BitMatrix& rhs = single ? b.slice(k0) : *sum_b;
    std::uint64_t now = single ? 0 : 2;

    if (std::has_single_bit(term.outputs)) {
      addmul(coeffs[static_cast<std::size_t>(std::countr_zero(term.outputs))].view(), lhs.view(), rhs.view());
    } else {
      if (!product) product.emplace(m, n);
      product->clear();
      addmul(product->view(), lhs.view(), rhs.view());
      for (std::uint32_t out = term.outputs; out; out &= out - 1) {
        coeffs[static_cast<std::size_t>(std::countr_zero(out))] += *product;
        ++counters.gf2_adds;
      }
    }
    if (product) ++now;
    live = std::max(live, now);
    ++counters.gf2_muls;
  }
  counters.note_temporaries(live);
  auto reduced = reduce_mod_f(std::move(coeffs), a.field());
  counters.gf2_adds += static_cast<std::uint64_t>(e - 1) * static_cast<std::uint64_t>(std::popcount(a.field().modulus()) - 1);
  return SlicedMatrix(a.field_ptr(), std::move(reduced));
}

std::size_t count_products(int degree) {
  const FieldPtr field = default_field(degree);
  Rng rng(0x5eed0000u + static_cast<std::uint64_t>(degree));
  const SlicedMatrix a = slice(PackedMatrix::random(field, 4, 4, rng));
  const SlicedMatrix b = slice(PackedMatrix::random(field, 4, 4, rng));
  auto& counters = op_counters();
  const MulCounters saved = counters;
  counters.reset();
  (void)karatsuba_mul(a, b);
  const std::size_t count = counters.gf2_muls;
  counters = saved;
  return count;
}

MulBackend parse_backend(std::string_view name) {
  if (name == "cubic") return MulBackend::kCubic;
  if (name == "nj") return MulBackend::kNewtonJohn;
  if (name == "strassen") return MulBackend::kStrassen;
  if (name == "karatsuba") return MulBackend::kKaratsuba;
  if (name == "auto") return MulBackend::kAuto;
  throw std::invalid_argument("unknown multiplication backend '" + std::string(name) + "'");
}

std::string_view backend_name(MulBackend backend) {
  switch (backend) {
    case MulBackend::kCubic:
      return "cubic";
    case MulBackend::kNewtonJohn:
      return "nj";
    case MulBackend::kStrassen:
      return "strassen";
    case MulBackend::kKaratsuba:
      return "karatsuba";
    case MulBackend::kAuto:
      return "auto";
  }
  return "?";
}

PackedMatrix multiply(const PackedMatrix& a, const PackedMatrix& b, MulBackend backend, std::size_t crossover) {
  check_conformable(a, b);
  switch (backend) {
    case MulBackend::kCubic:
      return cubic_mul(a, b);
    case MulBackend::kNewtonJohn:
      return nj_mul(a, b);
    case MulBackend::kStrassen:
      return strassen_nj_mul(a, b, crossover);
    case MulBackend::kKaratsuba:
      return cling(karatsuba_mul(slice(a), slice(b)));
    case MulBackend::kAuto:
      break;
  }
  if (a.rows() <= crossover && a.cols() <= crossover && b.cols() <= crossover) return nj_mul(a, b);
  return cling(karatsuba_mul(slice(a), slice(b)));
}

}  // namespace gf2e
