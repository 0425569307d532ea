#pragma once

// Reference implementations used by the tests. Nothing here touches the
// library's multiplication tables, packed kernels or elimination code: field
// products are schoolbook shift-and-add with reduction, matrices are plain
// nested vectors.

#include <cstdint>
#include <utility>
#include <vector>

#include "gf2e/packed_matrix.hpp"
#include "gf2e/random.hpp"

namespace oracle {

using gf2e::Element;
using Dense = std::vector<std::vector<Element>>;

// The moduli the library must use, one per degree 2..10.
inline std::uint32_t expected_modulus(int e) {
  static const std::uint32_t table[] = {0b111,      0b1011,      0b10011,      0b100101,      0b1000011,
                                        0b10000011, 0b100011101, 0b1000010001, 0b10000001001};
  return table[e - 2];
}

inline Element mul(Element a, Element b, int e, std::uint32_t f) {
  Element acc = 0;
  for (int i = 0; i < e; ++i) {
    if ((b >> i) & 1u) acc ^= a;
    const bool carry = (a >> (e - 1)) & 1u;
    a = (a << 1) & ((1u << e) - 1);
    if (carry) a ^= f & ((1u << e) - 1);
  }
  return acc;
}

inline Element pow(Element a, std::uint64_t k, int e, std::uint32_t f) {
  Element r = 1;
  while (k) {
    if (k & 1u) r = mul(r, a, e, f);
    a = mul(a, a, e, f);
    k >>= 1;
  }
  return r;
}

// a^(2^e - 2); only meaningful for a != 0.
inline Element inv(Element a, int e, std::uint32_t f) { return pow(a, (1u << e) - 2, e, f); }

// Irreducibility by exhaustive trial division over all polynomials of
// degree 1..deg/2.
inline bool irreducible(std::uint32_t f) {
  int deg = 31;
  while (deg >= 0 && !((f >> deg) & 1u)) --deg;
  if (deg < 1) return false;
  for (std::uint32_t g = 2; g < (1u << (deg / 2 + 1)); ++g) {
    std::uint32_t r = f;
    int gd = 31;
    while (!((g >> gd) & 1u)) --gd;
    for (int d = deg; d >= gd; --d) {
      if ((r >> d) & 1u) r ^= g << (d - gd);
    }
    if (r == 0) return false;
  }
  return true;
}

inline Dense to_dense(const gf2e::PackedMatrix& a) {
  Dense d(a.rows(), std::vector<Element>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = a.get(i, j);
  return d;
}

inline gf2e::PackedMatrix from_dense(const gf2e::FieldPtr& field, const Dense& d, std::size_t cols) {
  gf2e::PackedMatrix a(field, d.size(), cols);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, d[i][j]);
  return a;
}

// Per-entry triple loop.
inline Dense matmul(const Dense& a, const Dense& b, std::size_t n, int e, std::uint32_t f) {
  const std::size_t inner = b.size();
  Dense c(a.size(), std::vector<Element>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element s = 0;
      for (std::size_t l = 0; l < inner; ++l) s ^= mul(a[i][l], b[l][j], e, f);
      c[i][j] = s;
    }
  return c;
}

// Scalar Gauss-Jordan: reduced row echelon form and rank.
inline std::pair<Dense, std::size_t> rref(Dense a, std::size_t cols, int e, std::uint32_t f) {
  const std::size_t m = a.size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < m; ++j) {
    std::size_t p = r;
    while (p < m && a[p][j] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const Element s = inv(a[r][j], e, f);
    for (auto& x : a[r]) x = mul(x, s, e, f);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Element c = a[i][j];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] ^= mul(c, a[r][k], e, f);
    }
    ++r;
  }
  return {std::move(a), r};
}

// Random matrix whose rank is at most `rank` (product of two random factors).
inline gf2e::PackedMatrix low_rank(const gf2e::FieldPtr& field, std::size_t m, std::size_t n, std::size_t rank,
                                   gf2e::Rng& rng) {
  const int e = field->degree();
  const std::uint32_t f = field->modulus();
  const auto x = to_dense(gf2e::PackedMatrix::random(field, m, rank, rng));
  const auto y = to_dense(gf2e::PackedMatrix::random(field, rank, n, rng));
  return from_dense(field, matmul(x, y, n, e, f), n);
}

// Random upper (or lower) triangular n x n matrix with nonzero diagonal.
inline gf2e::PackedMatrix triangular(const gf2e::FieldPtr& field, std::size_t n, bool upper, gf2e::Rng& rng) {
  gf2e::PackedMatrix t = gf2e::PackedMatrix::random(field, n, n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (upper ? j < i : j > i) t.set(i, j, 0);
    }
    t.set(i, i, static_cast<Element>(rng.between(1, field->order() - 1)));
  }
  return t;
}

}  // namespace oracle
