#include "gf2e/newton_john.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <string>

#include "gf2e/counters.hpp"
#include "gf2e/tuning.hpp"

namespace gf2e {

namespace {

// Words of a packed row from the one holding column `col` to the end.
std::size_t first_word(const PackedMatrix& a, std::size_t col) {
  return col * static_cast<std::size_t>(a.width()) / kWordBits;
}

// Builds the table of multiples of row `r` of `a`, restricted to words
// [w0, nw) and with every column < keep_from cleared.
void table_from_row(const PackedMatrix& a, std::size_t r, std::size_t keep_from, std::size_t w0,
                    std::vector<Word>& row_copy, Word* table) {
  const std::size_t nw = a.row_words();
  row_copy.assign(a.row(r).begin() + static_cast<std::ptrdiff_t>(w0), a.row(r).end());
  const std::size_t cut_bit = keep_from * static_cast<std::size_t>(a.width());
  const std::size_t base_bit = w0 * kWordBits;
  if (cut_bit > base_bit) {
    const std::size_t rel = cut_bit - base_bit;
    const std::size_t full = rel / kWordBits;
    for (std::size_t w = 0; w < full && w < row_copy.size(); ++w) row_copy[w] = 0;
    if (full < row_copy.size() && rel % kWordBits) row_copy[full] &= ~((Word{1} << (rel % kWordBits)) - 1);
  }
  detail::fill_nj_table(a.field(), row_copy.data(), nw - w0, table);
}

}  // namespace

SingularMatrixError::SingularMatrixError(std::size_t index)
    : std::domain_error("triangular matrix is singular: zero diagonal entry at index " + std::to_string(index)),
      index_(index) {}

namespace detail {

void fill_nj_table(const Field& field, const Word* src, std::size_t nwords, Word* table) {
  const int e = field.degree();
  const std::size_t q = std::size_t{1} << e;
  auto& counters = op_counters();
  thread_local std::vector<Word> powers;
  powers.resize(static_cast<std::size_t>(e) * nwords);

  // alpha^k * src for k = 0..e-1
  std::memcpy(powers.data(), src, nwords * sizeof(Word));
  for (int k = 1; k < e; ++k) {
    mul_alpha_words(field, powers.data() + static_cast<std::size_t>(k) * nwords,
                    powers.data() + static_cast<std::size_t>(k - 1) * nwords, nwords);
  }
  counters.table_scalar_rows += static_cast<std::uint64_t>(e);

  std::fill(table, table + nwords, Word{0});
  std::size_t prev = 0;
  for (std::size_t i = 1; i < q; ++i) {
    const std::size_t gray = i ^ (i >> 1);
    const auto flipped = static_cast<std::size_t>(std::countr_zero(i));
    Word* dst = table + gray * nwords;
    const Word* from = table + prev * nwords;
    const Word* add = powers.data() + flipped * nwords;
    for (std::size_t w = 0; w < nwords; ++w) dst[w] = from[w] ^ add[w];
    prev = gray;
  }
  counters.table_row_adds += q - 1;
  ++counters.tables_built;
}

}  // namespace detail

NjTable::NjTable(const PackedMatrix& b, std::size_t row)
    : table_(b.field_ptr(), std::size_t{1} << b.degree(), b.cols()), source_(row) {
  if (row >= b.rows()) throw std::out_of_range("make_table: row index out of range");
  detail::fill_nj_table(b.field(), b.row(row).data(), b.row_words(), table_.bits().data());
}

NjTable make_table(const PackedMatrix& b, std::size_t row) { return NjTable(b, row); }

void nj_addmul(PackedMatrix& c, const PackedMatrix& a, const PackedMatrix& b) {
  check_compatible(a, b);
  check_compatible(c, a);
  if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols()) {
    throw std::invalid_argument("nj_mul: dimension mismatch");
  }
  const std::size_t m = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t nw = b.row_words();
  if (m == 0 || inner == 0 || nw == 0) return;

  const std::size_t q = std::size_t{1} << a.degree();
  const auto& tune = tuning();
  const std::size_t stripe = std::max<std::size_t>(1, tune.nj_block_bytes / (q * sizeof(Word)));
  const std::size_t ntables = static_cast<std::size_t>(std::clamp(tune.nj_tables, 1, 8));
  std::vector<Word> tables(ntables * q * std::min(stripe, nw));
  std::array<const Word*, 8> picks{};

  for (std::size_t w0 = 0; w0 < nw; w0 += stripe) {
    const std::size_t bw = std::min(stripe, nw - w0);
    for (std::size_t i = 0; i < inner; i += ntables) {
      const std::size_t used = std::min(ntables, inner - i);
      for (std::size_t s = 0; s < used; ++s) {
        detail::fill_nj_table(b.field(), b.row(i + s).data() + w0, bw, tables.data() + s * q * bw);
      }
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t live = 0;
        for (std::size_t s = 0; s < used; ++s) {
          const Element x = a.at(j, i + s);
          if (x) picks[live++] = tables.data() + (s * q + x) * bw;
        }
        if (live == 0) continue;
        Word* crow = c.row(j).data() + w0;
        if (live == 1) {
          xor_words(crow, picks[0], bw);
        } else if (live == 2) {
          for (std::size_t w = 0; w < bw; ++w) crow[w] ^= picks[0][w] ^ picks[1][w];
        } else {
          for (std::size_t t = 0; t < live; ++t) xor_words(crow, picks[t], bw);
        }
      }
    }
  }
}

PackedMatrix nj_mul(const PackedMatrix& a, const PackedMatrix& b) {
  check_compatible(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("nj_mul: dimension mismatch");
  PackedMatrix c(a.field_ptr(), a.rows(), b.cols());
  nj_addmul(c, a, b);
  return c;
}

std::size_t nj_gauss(PackedMatrix& a, bool full) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t nw = a.row_words();
  const Field& field = a.field();
  const std::size_t q = std::size_t{1} << a.degree();
  std::vector<Word> table;
  std::vector<Word> row_copy;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t i = r;
    while (i < m && a.at(i, j) == 0) ++i;
    if (i == m) continue;
    a.row_swap(i, r);
    a.scale_row(r, field.inv(a.at(r, j)), j);

    const std::size_t w0 = first_word(a, j);
    const std::size_t bw = nw - w0;
    table.resize(q * bw);
    // columns < j of the pivot row are already zero
    table_from_row(a, r, 0, w0, row_copy, table.data());
    for (std::size_t k = full ? 0 : r + 1; k < m; ++k) {
      if (k == r) continue;
      const Element x = a.at(k, j);
      if (x) xor_words(a.row(k).data() + w0, table.data() + x * bw, bw);
    }
    ++r;
  }
  return r;
}

PleFactors nj_ple(PackedMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t nw = a.row_words();
  const Field& field = a.field();
  const std::size_t q = std::size_t{1} << a.degree();
  PleFactors f{PermVector(std::min(m, n)), PermVector(std::min(m, n)), 0};
  std::vector<Word> table;
  std::vector<Word> row_copy;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t i = r;
    while (i < m && a.at(i, j) == 0) ++i;
    if (i == m) continue;
    f.p[r] = i;
    f.q[r] = j;
    a.row_swap(i, r);
    // the pivot value stays in place as L's diagonal; E's row gets a leading one
    a.scale_row(r, field.inv(a.at(r, j)), j + 1);

    const std::size_t w0 = first_word(a, j);
    const std::size_t bw = nw - w0;
    table.resize(q * bw);
    // columns <= j of the pivot row hold L entries and the pivot: leave them out
    table_from_row(a, r, j + 1, w0, row_copy, table.data());
    for (std::size_t k = r + 1; k < m; ++k) {
      const Element x = a.at(k, j);
      if (x) xor_words(a.row(k).data() + w0, table.data() + x * bw, bw);
    }
    ++r;
  }
  f.rank = r;
  // compress L into the leading r columns
  for (std::size_t k = 0; k < r; ++k) a.col_swap(k, f.q[k], k);
  return f;
}

void nj_trsm_upper_left(const PackedMatrix& u, PackedMatrix& b) {
  check_compatible(u, b);
  const std::size_t m = u.rows();
  if (u.cols() != m || b.rows() != m) throw std::invalid_argument("trsm: dimension mismatch");
  const Field& field = u.field();
  const std::size_t nw = b.row_words();
  const std::size_t q = std::size_t{1} << u.degree();
  for (std::size_t i = 0; i < m; ++i) {
    if (u.at(i, i) == 0) throw SingularMatrixError(i);
  }
  std::vector<Word> table(q * nw);
  for (std::size_t i = m; i-- > 0;) {
    b.scale_row(i, field.inv(u.at(i, i)));
    if (i == 0) break;
    detail::fill_nj_table(field, b.row(i).data(), nw, table.data());
    for (std::size_t j = 0; j < i; ++j) {
      const Element x = u.at(j, i);
      if (x) xor_words(b.row(j).data(), table.data() + x * nw, nw);
    }
  }
}

void nj_trsm_lower_left(const PackedMatrix& l, PackedMatrix& b, bool unit_diagonal) {
  check_compatible(l, b);
  const std::size_t m = l.rows();
  if (l.cols() != m || b.rows() != m) throw std::invalid_argument("trsm: dimension mismatch");
  const Field& field = l.field();
  const std::size_t nw = b.row_words();
  const std::size_t q = std::size_t{1} << l.degree();
  if (!unit_diagonal) {
    for (std::size_t i = 0; i < m; ++i) {
      if (l.at(i, i) == 0) throw SingularMatrixError(i);
    }
  }
  std::vector<Word> table(q * nw);
  for (std::size_t i = 0; i < m; ++i) {
    if (!unit_diagonal) b.scale_row(i, field.inv(l.at(i, i)));
    if (i + 1 == m) break;
    detail::fill_nj_table(field, b.row(i).data(), nw, table.data());
    for (std::size_t j = i + 1; j < m; ++j) {
      const Element x = l.at(j, i);
      if (x) xor_words(b.row(j).data(), table.data() + x * nw, nw);
    }
  }
}

std::pair<PackedMatrix, PackedMatrix> unpack_ple(const PackedMatrix& a, const PleFactors& f) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t r = f.rank;
  PackedMatrix l(a.field_ptr(), m, r);
  PackedMatrix e(a.field_ptr(), r, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < std::min(i + 1, r); ++c) l.put(i, c, a.at(i, c));
  }
  for (std::size_t k = 0; k < r; ++k) {
    e.put(k, f.q[k], 1);
    for (std::size_t c = f.q[k] + 1; c < n; ++c) e.put(k, c, a.at(k, c));
  }
  return {std::move(l), std::move(e)};
}

PackedMatrix reconstruct_ple(const PackedMatrix& a, const PleFactors& f) {
  auto [l, e] = unpack_ple(a, f);
  PackedMatrix out = f.rank ? nj_mul(l, e) : PackedMatrix(a.field_ptr(), a.rows(), a.cols());
  apply_perm_rows(out, f.p, PermDirection::kBackward);
  return out;
}

}  // namespace gf2e
