#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace gf2e {

class Rng;

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Mask selecting the valid bits of the last word of a `bits`-wide row.
inline constexpr Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

/// Reads `len` (<= 64) bits of a row starting at bit `pos`. `nwords` bounds
/// the row so the read never touches the following row.
inline Word read_bits(const Word* row, std::size_t nwords, std::size_t pos, std::size_t len) {
  const std::size_t w = pos / kWordBits;
  const std::size_t s = pos % kWordBits;
  Word v = row[w] >> s;
  if (s != 0 && s + len > kWordBits && w + 1 < nwords) v |= row[w + 1] << (kWordBits - s);
  return len == kWordBits ? v : v & ((Word{1} << len) - 1);
}

/// Overwrites `len` (<= 64) bits of a row starting at bit `pos`.
inline void write_bits(Word* row, std::size_t pos, std::size_t len, Word value) {
  const std::size_t w = pos / kWordBits;
  const std::size_t s = pos % kWordBits;
  const Word mask = len == kWordBits ? ~Word{0} : (Word{1} << len) - 1;
  value &= mask;
  row[w] = (row[w] & ~(mask << s)) | (value << s);
  if (s != 0 && s + len > kWordBits) {
    const std::size_t spill = s + len - kWordBits;
    const Word hi_mask = (Word{1} << spill) - 1;
    row[w + 1] = (row[w + 1] & ~hi_mask) | (value >> (kWordBits - s));
  }
}

inline void xor_words(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

/// Non-owning window over a rectangular block of a BitMatrix whose first
/// column is a multiple of 64. Rows may carry bits of neighbouring columns
/// past `cols()` in their last word; every kernel that writes through a
/// window masks them out.
template <class W>
class BasicBitView {
 public:
  BasicBitView() = default;
  BasicBitView(W* data, std::size_t rows, std::size_t cols, std::size_t stride)
      : data_(data), rows_(rows), cols_(cols), stride_(stride) {}

  // allow BitView -> ConstBitView
  template <class U>
    requires std::is_convertible_v<U*, W*>
  BasicBitView(const BasicBitView<U>& other)  // NOLINT(google-explicit-constructor)
      : data_(other.data()), rows_(other.rows()), cols_(other.cols()), stride_(other.stride()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  std::size_t row_words() const { return words_for(cols_); }
  Word last_mask() const { return tail_mask(cols_); }
  W* data() const { return data_; }
  W* row(std::size_t i) const { return data_ + i * stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (row(i)[j / kWordBits] >> (j % kWordBits)) & 1u;
  }

  void set(std::size_t i, std::size_t j, bool v) const
    requires(!std::is_const_v<W>)
  {
    Word& w = row(i)[j / kWordBits];
    const Word bit = Word{1} << (j % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }

  /// Sub-window; `c0` must be a multiple of 64.
  BasicBitView window(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (c0 % kWordBits != 0) throw std::invalid_argument("window column offset must be word aligned");
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("window exceeds parent bounds");
    return BasicBitView(data_ + r0 * stride_ + c0 / kWordBits, nr, nc, stride_);
  }

 private:
  W* data_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
};

using BitView = BasicBitView<Word>;
using ConstBitView = BasicBitView<const Word>;

/// Dense matrix over GF(2), row-major, 64 entries per word. Bit j of word k
/// in row i is entry (i, 64k + j). Bits past `cols()` are kept zero, so two
/// matrices are equal exactly when their words are.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::span<Word> row(std::size_t i) { return {words_.data() + i * stride_, stride_}; }
  std::span<const Word> row(std::size_t i) const { return {words_.data() + i * stride_, stride_}; }
  std::span<const Word> words() const { return words_; }
  Word* data() { return words_.data(); }
  const Word* data() const { return words_.data(); }

  bool get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (words_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    check_index(i, j);
    Word& w = words_[i * stride_ + j / kWordBits];
    const Word bit = Word{1} << (j % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }

  BitView view() { return {words_.data(), rows_, cols_, stride_}; }
  ConstBitView view() const { return {words_.data(), rows_, cols_, stride_}; }
  BitView window(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    return view().window(r0, c0, nr, nc);
  }
  ConstBitView window(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    return view().window(r0, c0, nr, nc);
  }

  void row_swap(std::size_t a, std::size_t b);
  void col_swap(std::size_t a, std::size_t b);
  void clear();
  bool is_zero() const;

  /// Fills with uniformly random bits drawn from `rng`.
  void randomize(Rng& rng);

  /// Copy of an arbitrary rectangular block (no alignment requirement).
  BitMatrix copy_window(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  /// Overwrites the block at (r0, c0) with `src` (no alignment requirement).
  void paste(std::size_t r0, std::size_t c0, const BitMatrix& src);

  BitMatrix& operator+=(const BitMatrix& other);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

  /// Copies a window into a fresh matrix.
  static BitMatrix from_view(ConstBitView v);

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("BitMatrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

/// dst += src entrywise; shapes must match.
void add_into(BitView dst, ConstBitView src);
/// dst = src; shapes must match.
void copy_into(BitView dst, ConstBitView src);
/// Zeroes the window without touching neighbouring columns.
void clear(BitView dst);

BitMatrix add(const BitMatrix& a, const BitMatrix& b);

enum class Gf2MulStrategy { kAuto, kCubic, kM4rm, kStrassen };

/// C += A * B over GF(2).
void addmul(BitView c, ConstBitView a, ConstBitView b, Gf2MulStrategy strategy = Gf2MulStrategy::kAuto);

/// A * B over GF(2). kAuto runs M4RM below the Strassen crossover from
/// tuning() and Strassen-Winograd above it; every strategy gives the same bits.
BitMatrix mul(const BitMatrix& a, const BitMatrix& b, Gf2MulStrategy strategy = Gf2MulStrategy::kAuto);

/// All 2^k linear combinations of the k rows of `m`: row x of the result is
/// the sum of the rows m_i with bit i of x set. Walks a Gray code, so exactly
/// 2^k - 1 row additions are made (recorded in op_counters()).
BitMatrix linear_combinations(ConstBitView m);

}  // namespace gf2e
