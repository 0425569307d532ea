#include "gf2e/packed_matrix.hpp"

#include <array>
#include <string>

#include "gf2e/random.hpp"

namespace gf2e {

namespace {

Word replicate(Word pattern, int width) {
  Word out = 0;
  for (std::size_t s = 0; s < kWordBits; s += static_cast<std::size_t>(width)) out |= pattern << s;
  return out;
}

}  // namespace

int pack_width(int degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw FieldError("pack_width: degree " + std::to_string(degree) + " out of range");
  }
  int w = 1;
  while (w < degree) w *= 2;  // divisors of 64 are the powers of two up to 64
  return w;
}

PackedMatrix::PackedMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (!field_) throw std::invalid_argument("PackedMatrix requires a field");
  width_ = pack_width(field_->degree());
  bits_ = BitMatrix(rows, cols * static_cast<std::size_t>(width_));
}

PackedMatrix PackedMatrix::identity(FieldPtr field, std::size_t n) {
  PackedMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.put(i, i, 1);
  return m;
}

PackedMatrix PackedMatrix::random(FieldPtr field, std::size_t rows, std::size_t cols, Rng& rng) {
  PackedMatrix m(std::move(field), rows, cols);
  const Word valid = replicate((Word{1} << m.degree()) - 1, m.width_);
  const std::size_t nw = m.row_words();
  const Word last = tail_mask(cols * static_cast<std::size_t>(m.width_));
  for (std::size_t i = 0; i < rows; ++i) {
    Word* r = m.bits_.row(i).data();
    for (std::size_t w = 0; w < nw; ++w) r[w] = rng.next() & valid;
    if (nw) r[nw - 1] &= last;
  }
  return m;
}

void PackedMatrix::set(std::size_t i, std::size_t j, Element x) {
  check_index(i, j);
  if (!field_->contains(x)) throw std::out_of_range("element " + std::to_string(x) + " not in GF(2^e)");
  put(i, j, x);
}

void PackedMatrix::col_swap(std::size_t a, std::size_t b, std::size_t row_begin) {
  if (a >= cols_ || b >= cols_) throw std::out_of_range("col_swap index out of range");
  if (a == b) return;
  for (std::size_t i = row_begin; i < rows_; ++i) {
    const Element x = at(i, a);
    put(i, a, at(i, b));
    put(i, b, x);
  }
}

void PackedMatrix::scale_row(std::size_t i, Element c, std::size_t from_col) {
  if (c == 1) return;
  const std::uint16_t* table = field_->mul_row(c);
  for (std::size_t j = from_col; j < cols_; ++j) put(i, j, table[at(i, j)]);
}

PackedMatrix PackedMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("submatrix exceeds matrix bounds");
  PackedMatrix out(field_, nr, nc);
  const auto w = static_cast<std::size_t>(width_);
  out.bits_ = bits_.copy_window(r0, c0 * w, nr, nc * w);
  return out;
}

void PackedMatrix::paste(std::size_t r0, std::size_t c0, const PackedMatrix& src) {
  check_compatible(*this, src);
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("paste exceeds matrix bounds");
  bits_.paste(r0, c0 * static_cast<std::size_t>(width_), src.bits_);
}

bool PackedMatrix::pad_bits_clear() const {
  if (width_ == degree()) return true;
  const Word pad = replicate(((Word{1} << width_) - 1) ^ ((Word{1} << degree()) - 1), width_);
  for (Word w : bits_.words()) {
    if (w & pad) return false;
  }
  return true;
}

PackedMatrix& PackedMatrix::operator+=(const PackedMatrix& other) {
  check_compatible(*this, other);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix dimension mismatch");
  bits_ += other.bits_;
  return *this;
}

void check_compatible(const PackedMatrix& a, const PackedMatrix& b) {
  if (a.degree() != b.degree() || a.field().modulus() != b.field().modulus()) {
    throw std::invalid_argument("matrices are defined over different fields");
  }
}

PackedMatrix add(const PackedMatrix& a, const PackedMatrix& b) {
  PackedMatrix c = a;
  c += b;
  return c;
}

void mul_alpha_words(const Field& field, Word* dst, const Word* src, std::size_t n) {
  const int e = field.degree();
  const int w = pack_width(e);
  const Word top = replicate(Word{1} << (e - 1), w);
  const Word low = replicate((Word{1} << (e - 1)) - 1, w);
  // f without its leading term; slot bases of `hi` are w >= e apart so the
  // integer product below never carries between slots
  const Word fold = field.modulus() & ((Word{1} << e) - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Word x = src[i];
    const Word hi = (x & top) >> (e - 1);
    dst[i] = ((x & low) << 1) ^ (hi * fold);
  }
}

void scale_words(const Field& field, Word* row, std::size_t n, Element c) {
  const int w = pack_width(field.degree());
  const std::uint16_t* mr = field.mul_row(c);
  // pad bits are zero, so masking to e bits only matters for unused table slots
  const unsigned elem = field.order() - 1;
  if (w <= 8) {
    std::array<std::uint8_t, 256> table{};
    for (unsigned b = 0; b < 256; ++b) {
      unsigned out = 0;
      for (int s = 0; s < 8; s += w) out |= static_cast<unsigned>(mr[(b >> s) & elem]) << s;
      table[b] = static_cast<std::uint8_t>(out);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Word x = row[i];
      Word y = 0;
      for (int s = 0; s < 64; s += 8) y |= Word{table[(x >> s) & 0xff]} << s;
      row[i] = y;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      Word x = row[i];
      Word y = 0;
      for (int s = 0; s < 64; s += 16) y |= Word{mr[(x >> s) & elem]} << s;
      row[i] = y;
    }
  }
}

PackedMatrix scalar_mul(const PackedMatrix& a, Element c) {
  if (!a.field().contains(c)) throw std::out_of_range("scalar not in GF(2^e)");
  PackedMatrix out = a;
  if (c == 1) return out;
  for (std::size_t i = 0; i < out.rows(); ++i) scale_words(a.field(), out.row(i).data(), out.row_words(), c);
  return out;
}

}  // namespace gf2e
