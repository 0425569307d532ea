#include "gf2e/bit_matrix.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "gf2e/counters.hpp"
#include "gf2e/detail/winograd.hpp"
#include "gf2e/random.hpp"
#include "gf2e/tuning.hpp"

namespace gf2e {

namespace {

void check_same_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
  if (r1 != r2 || c1 != c2) throw std::invalid_argument("GF(2) matrix dimension mismatch");
}

// dst ^= src over the first `nwords` words, masking the last one.
inline void xor_row_masked(Word* dst, const Word* src, std::size_t nwords, Word last) {
  if (nwords == 0) return;
  xor_words(dst, src, nwords - 1);
  dst[nwords - 1] ^= src[nwords - 1] & last;
}

void addmul_cubic(BitView c, ConstBitView a, ConstBitView b) {
  const std::size_t nw = c.row_words();
  const Word last = c.last_mask();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Word* crow = c.row(i);
    const Word* arow = a.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if ((arow[l / kWordBits] >> (l % kWordBits)) & 1u) xor_row_masked(crow, b.row(l), nw, last);
    }
  }
}

constexpr std::size_t kM4rmBits = 8;
constexpr std::size_t kM4rmRows = std::size_t{1} << kM4rmBits;

// Fills table rows [0, 2^k) with all combinations of k rows of b restricted
// to words [w0, w0 + bw), walking a Gray code.
void build_gray_table(Word* table, std::size_t bw, ConstBitView b, std::size_t first_row, std::size_t k,
                      std::size_t w0, Word last_mask, bool last_block) {
  std::fill(table, table + bw, Word{0});
  std::size_t prev = 0;
  for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
    const std::size_t gray = i ^ (i >> 1);
    const auto flipped = static_cast<std::size_t>(std::countr_zero(i));
    Word* dst = table + gray * bw;
    const Word* src = table + prev * bw;
    const Word* brow = b.row(first_row + flipped) + w0;
    for (std::size_t w = 0; w < bw; ++w) dst[w] = src[w] ^ brow[w];
    if (last_block) dst[bw - 1] &= last_mask;
    prev = gray;
  }
  // rows past 2^k stay unused
}

void addmul_m4rm(BitView c, ConstBitView a, ConstBitView b) {
  const std::size_t m = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t nw = c.row_words();
  if (m == 0 || inner == 0 || nw == 0) return;
  const std::size_t ntables = static_cast<std::size_t>(std::clamp(tuning().m4rm_tables, 1, 8));
  // keep all tables of one pass within ~128 KiB
  const std::size_t block_words =
      std::max<std::size_t>(1, (128 * 1024) / (ntables * kM4rmRows * sizeof(Word)));
  const Word last = c.last_mask();
  const std::size_t a_words = a.row_words();

  std::vector<Word> tables(ntables * kM4rmRows * std::min(block_words, nw));
  std::array<const Word*, 8> picks{};

  for (std::size_t w0 = 0; w0 < nw; w0 += block_words) {
    const std::size_t bw = std::min(block_words, nw - w0);
    const bool last_block = (w0 + bw == nw);
    for (std::size_t k0 = 0; k0 < inner; k0 += ntables * kM4rmBits) {
      std::size_t used = 0;
      std::array<std::size_t, 8> chunk_bits{};
      for (std::size_t t = 0; t < ntables; ++t) {
        const std::size_t start = k0 + t * kM4rmBits;
        if (start >= inner) break;
        chunk_bits[t] = std::min(kM4rmBits, inner - start);
        build_gray_table(tables.data() + t * kM4rmRows * bw, bw, b, start, chunk_bits[t], w0, last,
                         last_block);
        ++used;
      }
      for (std::size_t i = 0; i < m; ++i) {
        const Word* arow = a.row(i);
        for (std::size_t t = 0; t < used; ++t) {
          const std::size_t start = k0 + t * kM4rmBits;
          const auto idx = static_cast<std::size_t>(read_bits(arow, a_words, start, chunk_bits[t]));
          picks[t] = tables.data() + (t * kM4rmRows + idx) * bw;
        }
        Word* crow = c.row(i) + w0;
        switch (used) {
          case 4:
            for (std::size_t w = 0; w < bw; ++w) crow[w] ^= picks[0][w] ^ picks[1][w] ^ picks[2][w] ^ picks[3][w];
            break;
          case 2:
            for (std::size_t w = 0; w < bw; ++w) crow[w] ^= picks[0][w] ^ picks[1][w];
            break;
          default:
            for (std::size_t t = 0; t < used; ++t) xor_words(crow, picks[t], bw);
        }
      }
    }
  }
}

void addmul_strassen(BitView c, ConstBitView a, ConstBitView b, std::size_t crossover);

BitMatrix product_strassen(const BitMatrix& a, const BitMatrix& b, std::size_t crossover) {
  BitMatrix c(a.rows(), b.cols());
  addmul_strassen(c.view(), a.view(), b.view(), crossover);
  return c;
}

// Splits at multiples of 64 columns so every quadrant stays word aligned;
// fringes left over by the split are handled with M4RM.
void addmul_strassen(BitView c, ConstBitView a, ConstBitView b, std::size_t crossover) {
  const std::size_t m = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t n = b.cols();
  const std::size_t m2 = m / 2;
  const std::size_t k2 = (inner / (2 * kWordBits)) * kWordBits;
  const std::size_t n2 = (n / (2 * kWordBits)) * kWordBits;
  if (m <= crossover || inner <= crossover || n <= crossover || m2 == 0 || k2 == 0 || n2 == 0) {
    addmul_m4rm(c, a, b);
    return;
  }
  auto q = [](ConstBitView v, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    return BitMatrix::from_view(v.window(r0, c0, nr, nc));
  };
  const BitMatrix a11 = q(a, 0, 0, m2, k2), a12 = q(a, 0, k2, m2, k2);
  const BitMatrix a21 = q(a, m2, 0, m2, k2), a22 = q(a, m2, k2, m2, k2);
  const BitMatrix b11 = q(b, 0, 0, k2, n2), b12 = q(b, 0, n2, k2, n2);
  const BitMatrix b21 = q(b, k2, 0, k2, n2), b22 = q(b, k2, n2, k2, n2);
  auto sub = [crossover](const BitMatrix& x, const BitMatrix& y) { return product_strassen(x, y, crossover); };
  const auto quads = detail::winograd_step(a11, a12, a21, a22, b11, b12, b21, b22, sub);
  add_into(c.window(0, 0, m2, n2), quads[0].view());
  add_into(c.window(0, n2, m2, n2), quads[1].view());
  add_into(c.window(m2, 0, m2, n2), quads[2].view());
  add_into(c.window(m2, n2, m2, n2), quads[3].view());

  // fringes
  if (inner > 2 * k2) {
    addmul_m4rm(c.window(0, 0, 2 * m2, 2 * n2), a.window(0, 2 * k2, 2 * m2, inner - 2 * k2),
                b.window(2 * k2, 0, inner - 2 * k2, 2 * n2));
  }
  if (n > 2 * n2) addmul_m4rm(c.window(0, 2 * n2, m, n - 2 * n2), a, b.window(0, 2 * n2, inner, n - 2 * n2));
  if (m > 2 * m2) addmul_m4rm(c.window(2 * m2, 0, m - 2 * m2, 2 * n2), a.window(2 * m2, 0, m - 2 * m2, inner),
                              b.window(0, 0, inner, 2 * n2));
}

}  // namespace

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  m.randomize(rng);
  return m;
}

BitMatrix BitMatrix::from_view(ConstBitView v) {
  BitMatrix m(v.rows(), v.cols());
  copy_into(m.view(), v);
  return m;
}

void BitMatrix::row_swap(std::size_t a, std::size_t b) {
  if (a >= rows_ || b >= rows_) throw std::out_of_range("row_swap index out of range");
  if (a == b) return;
  std::swap_ranges(words_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   words_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   words_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void BitMatrix::col_swap(std::size_t a, std::size_t b) {
  if (a >= cols_ || b >= cols_) throw std::out_of_range("col_swap index out of range");
  if (a == b) return;
  const std::size_t wa = a / kWordBits, wb = b / kWordBits;
  const std::size_t sa = a % kWordBits, sb = b % kWordBits;
  for (std::size_t i = 0; i < rows_; ++i) {
    Word* r = words_.data() + i * stride_;
    const Word x = ((r[wa] >> sa) ^ (r[wb] >> sb)) & 1u;
    r[wa] ^= x << sa;
    r[wb] ^= x << sb;
  }
}

void BitMatrix::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

bool BitMatrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void BitMatrix::randomize(Rng& rng) {
  const Word last = tail_mask(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Word* r = words_.data() + i * stride_;
    for (std::size_t w = 0; w < stride_; ++w) r[w] = rng.next();
    if (stride_) r[stride_ - 1] &= last;
  }
}

BitMatrix BitMatrix::copy_window(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("copy_window exceeds matrix bounds");
  BitMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const Word* src = words_.data() + (r0 + i) * stride_;
    Word* dst = out.words_.data() + i * out.stride_;
    for (std::size_t w = 0; w < out.stride_; ++w) {
      const std::size_t len = std::min(kWordBits, nc - w * kWordBits);
      dst[w] = read_bits(src, stride_, c0 + w * kWordBits, len);
    }
  }
  return out;
}

void BitMatrix::paste(std::size_t r0, std::size_t c0, const BitMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("paste exceeds matrix bounds");
  for (std::size_t i = 0; i < src.rows_; ++i) {
    const Word* s = src.words_.data() + i * src.stride_;
    Word* d = words_.data() + (r0 + i) * stride_;
    for (std::size_t w = 0; w < src.stride_; ++w) {
      const std::size_t len = std::min(kWordBits, src.cols_ - w * kWordBits);
      write_bits(d, c0 + w * kWordBits, len, s[w]);
    }
  }
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  check_same_shape(rows_, cols_, other.rows_, other.cols_);
  xor_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

void add_into(BitView dst, ConstBitView src) {
  check_same_shape(dst.rows(), dst.cols(), src.rows(), src.cols());
  const std::size_t nw = dst.row_words();
  const Word last = dst.last_mask();
  for (std::size_t i = 0; i < dst.rows(); ++i) xor_row_masked(dst.row(i), src.row(i), nw, last);
}

void copy_into(BitView dst, ConstBitView src) {
  check_same_shape(dst.rows(), dst.cols(), src.rows(), src.cols());
  const std::size_t nw = dst.row_words();
  if (nw == 0) return;
  const Word last = dst.last_mask();
  for (std::size_t i = 0; i < dst.rows(); ++i) {
    Word* d = dst.row(i);
    const Word* s = src.row(i);
    std::memcpy(d, s, (nw - 1) * sizeof(Word));
    d[nw - 1] = (d[nw - 1] & ~last) | (s[nw - 1] & last);
  }
}

void clear(BitView dst) {
  const std::size_t nw = dst.row_words();
  if (nw == 0) return;
  const Word last = dst.last_mask();
  for (std::size_t i = 0; i < dst.rows(); ++i) {
    Word* d = dst.row(i);
    std::fill(d, d + nw - 1, Word{0});
    d[nw - 1] &= ~last;
  }
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c = a;
  c += b;
  return c;
}

void addmul(BitView c, ConstBitView a, ConstBitView b, Gf2MulStrategy strategy) {
  if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols()) {
    throw std::invalid_argument("GF(2) matrix dimension mismatch in multiplication");
  }
  switch (strategy) {
    case Gf2MulStrategy::kCubic:
      addmul_cubic(c, a, b);
      break;
    case Gf2MulStrategy::kM4rm:
      addmul_m4rm(c, a, b);
      break;
    case Gf2MulStrategy::kStrassen:
      // explicit request: recurse down to small blocks
      addmul_strassen(c, a, b, 2 * kWordBits - 1);
      break;
    case Gf2MulStrategy::kAuto:
      addmul_strassen(c, a, b, std::max<std::size_t>(tuning().gf2_strassen_crossover, 2 * kWordBits - 1));
      break;
  }
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b, Gf2MulStrategy strategy) {
  if (a.cols() != b.rows()) throw std::invalid_argument("GF(2) matrix dimension mismatch in multiplication");
  BitMatrix c(a.rows(), b.cols());
  addmul(c.view(), a.view(), b.view(), strategy);
  return c;
}

BitMatrix linear_combinations(ConstBitView m) {
  const std::size_t k = m.rows();
  if (k > 20) throw std::invalid_argument("linear_combinations supports at most 20 rows");
  BitMatrix t(std::size_t{1} << k, m.cols());
  const std::size_t nw = t.stride();
  const Word last = tail_mask(m.cols());
  auto& counters = op_counters();
  std::size_t prev = 0;
  for (std::size_t i = 1; i < t.rows(); ++i) {
    const std::size_t gray = i ^ (i >> 1);
    const auto flipped = static_cast<std::size_t>(std::countr_zero(i));
    Word* dst = t.data() + gray * nw;
    std::memcpy(dst, t.data() + prev * nw, nw * sizeof(Word));
    xor_row_masked(dst, m.row(flipped), nw, last);
    ++counters.combination_row_adds;
    prev = gray;
  }
  return t;
}

}  // namespace gf2e
