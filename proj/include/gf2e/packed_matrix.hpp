#pragma once

#include <cstddef>
#include <span>

#include "gf2e/bit_matrix.hpp"
#include "gf2e/field.hpp"

namespace gf2e {

class Rng;

/// Bits reserved per element in the packed layout: the smallest divisor of
/// 64 that is at least e. Slots therefore never straddle a word.
int pack_width(int degree);

/// Matrix over GF(2^e) with every element stored in a `width()`-bit slot of a
/// 64-bit word (element j of a row sits at bits [j*w, j*w + e)). The top
/// w - e bits of each slot are always zero.
class PackedMatrix {
 public:
  PackedMatrix() = default;
  PackedMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static PackedMatrix identity(FieldPtr field, std::size_t n);
  static PackedMatrix random(FieldPtr field, std::size_t rows, std::size_t cols, Rng& rng);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int degree() const { return field_->degree(); }
  int width() const { return width_; }
  std::size_t per_word() const { return kWordBits / static_cast<std::size_t>(width_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return at(i, j);
  }
  void set(std::size_t i, std::size_t j, Element x);

  /// Unchecked access for inner loops.
  Element at(std::size_t i, std::size_t j) const {
    const std::size_t bit = j * static_cast<std::size_t>(width_);
    return static_cast<Element>((bits_.data()[i * bits_.stride() + bit / kWordBits] >> (bit % kWordBits)) &
                                slot_mask());
  }
  void put(std::size_t i, std::size_t j, Element x) {
    const std::size_t bit = j * static_cast<std::size_t>(width_);
    Word& w = bits_.data()[i * bits_.stride() + bit / kWordBits];
    const std::size_t s = bit % kWordBits;
    w = (w & ~(Word{slot_mask()} << s)) | (Word{x} << s);
  }

  const BitMatrix& bits() const { return bits_; }
  BitMatrix& bits() { return bits_; }
  std::size_t row_words() const { return bits_.stride(); }
  std::span<Word> row(std::size_t i) { return bits_.row(i); }
  std::span<const Word> row(std::size_t i) const { return bits_.row(i); }

  void row_swap(std::size_t a, std::size_t b) { bits_.row_swap(a, b); }
  /// Swaps columns a and b in rows [row_begin, rows()).
  void col_swap(std::size_t a, std::size_t b, std::size_t row_begin = 0);

  /// Scales row i by c in place, only touching columns >= from_col.
  void scale_row(std::size_t i, Element c, std::size_t from_col = 0);

  /// Copy of an arbitrary block.
  PackedMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Overwrites the block at (r0, c0) with `src`.
  void paste(std::size_t r0, std::size_t c0, const PackedMatrix& src);

  bool is_zero() const { return bits_.is_zero(); }
  /// True when every slot's top w - e bits are zero.
  bool pad_bits_clear() const;

  PackedMatrix& operator+=(const PackedMatrix& other);
  friend bool operator==(const PackedMatrix& a, const PackedMatrix& b) {
    return a.field_->modulus() == b.field_->modulus() && a.bits_ == b.bits_ && a.cols_ == b.cols_;
  }

 private:
  Element slot_mask() const { return (Element{1} << width_) - 1; }
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("PackedMatrix index out of range");
  }

  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int width_ = 0;
  BitMatrix bits_;
};

void check_compatible(const PackedMatrix& a, const PackedMatrix& b);

PackedMatrix add(const PackedMatrix& a, const PackedMatrix& b);

/// c * A, with a 256-entry byte table when a byte holds whole elements.
PackedMatrix scalar_mul(const PackedMatrix& a, Element c);

/// Word-parallel multiplication of `n` packed words by alpha (shift and fold
/// in f) for elements of the given field laid out with pack_width().
void mul_alpha_words(const Field& field, Word* dst, const Word* src, std::size_t n);

/// Scales `n` packed words by c in place (width w elements).
void scale_words(const Field& field, Word* row, std::size_t n, Element c);

}  // namespace gf2e
