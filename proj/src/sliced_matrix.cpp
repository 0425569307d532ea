#include "gf2e/sliced_matrix.hpp"

#include <array>

namespace gf2e {

namespace {

// Moves bits sitting at multiples of `width` (other bits zero) down to
// positions 0, 1, 2, ..., by repeatedly merging neighbouring groups.
struct BitGather {
  explicit BitGather(int width) {
    std::size_t group = 1;
    for (std::size_t spacing = static_cast<std::size_t>(width); spacing < kWordBits; spacing *= 2, group *= 2) {
      Step s;
      s.shift = spacing - group;
      const Word pattern = (Word{1} << (2 * group)) - 1;
      s.mask = 0;
      for (std::size_t p = 0; p < kWordBits; p += 2 * spacing) s.mask |= pattern << p;
      // mask of the groups before merging, for the inverse direction
      const Word before = (Word{1} << group) - 1;
      s.inv_mask = 0;
      for (std::size_t p = 0; p < kWordBits; p += spacing) s.inv_mask |= before << p;
      steps[count++] = s;
    }
    base = 0;
    for (std::size_t p = 0; p < kWordBits; p += static_cast<std::size_t>(width)) base |= Word{1} << p;
  }

  Word gather(Word x) const {
    for (int i = 0; i < count; ++i) x = (x | (x >> steps[i].shift)) & steps[i].mask;
    return x;
  }

  Word scatter(Word x) const {
    for (int i = count - 1; i >= 0; --i) x = (x | (x << steps[i].shift)) & steps[i].inv_mask;
    return x;
  }

  struct Step {
    std::size_t shift = 0;
    Word mask = 0;
    Word inv_mask = 0;
  };
  std::array<Step, 6> steps{};
  int count = 0;
  Word base = 0;
};

void check_same(const SlicedMatrix& a, const SlicedMatrix& b) {
  if (a.field().modulus() != b.field().modulus()) throw std::invalid_argument("matrices are defined over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

SlicedMatrix::SlicedMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (!field_) throw std::invalid_argument("SlicedMatrix requires a field");
  slices_.assign(static_cast<std::size_t>(field_->degree()), BitMatrix(rows, cols));
}

SlicedMatrix::SlicedMatrix(FieldPtr field, std::vector<BitMatrix> slices)
    : field_(std::move(field)), slices_(std::move(slices)) {
  if (!field_) throw std::invalid_argument("SlicedMatrix requires a field");
  if (slices_.size() != static_cast<std::size_t>(field_->degree())) {
    throw std::invalid_argument("slice count must equal the extension degree");
  }
  rows_ = slices_.front().rows();
  cols_ = slices_.front().cols();
  for (const auto& s : slices_) {
    if (s.rows() != rows_ || s.cols() != cols_) throw std::invalid_argument("slices must share one shape");
  }
}

Element SlicedMatrix::get(std::size_t i, std::size_t j) const {
  Element x = 0;
  for (std::size_t k = 0; k < slices_.size(); ++k) x |= static_cast<Element>(slices_[k].get(i, j)) << k;
  return x;
}

void SlicedMatrix::set(std::size_t i, std::size_t j, Element x) {
  if (!field_->contains(x)) throw std::out_of_range("element not in GF(2^e)");
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k].set(i, j, (x >> k) & 1u);
}

bool SlicedMatrix::is_zero() const {
  for (const auto& s : slices_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

SlicedMatrix& SlicedMatrix::operator+=(const SlicedMatrix& other) {
  check_same(*this, other);
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] += other.slices_[k];
  return *this;
}

SlicedMatrix slice(const PackedMatrix& a) {
  SlicedMatrix out(a.field_ptr(), a.rows(), a.cols());
  const int e = a.degree();
  const BitGather g(a.width());
  const std::size_t per_word = a.per_word();
  const std::size_t nw = a.row_words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Word* src = a.row(i).data();
    for (int k = 0; k < e; ++k) {
      Word* dst = out.slice(k).row(i).data();
      for (std::size_t t = 0; t < nw; ++t) {
        const Word bits = g.gather((src[t] >> k) & g.base);
        write_bits(dst, t * per_word, per_word, bits);
      }
    }
  }
  return out;
}

PackedMatrix cling(const SlicedMatrix& a) {
  PackedMatrix out(a.field_ptr(), a.rows(), a.cols());
  const int e = a.degree();
  const BitGather g(out.width());
  const std::size_t per_word = out.per_word();
  const std::size_t nw = out.row_words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Word* dst = out.row(i).data();
    for (int k = 0; k < e; ++k) {
      const BitMatrix& s = a.slice(k);
      const Word* src = s.row(i).data();
      for (std::size_t t = 0; t < nw; ++t) {
        const Word bits = read_bits(src, s.stride(), t * per_word, per_word);
        dst[t] |= g.scatter(bits) << k;
      }
    }
  }
  return out;
}

SlicedMatrix add(const SlicedMatrix& a, const SlicedMatrix& b) {
  SlicedMatrix c = a;
  c += b;
  return c;
}

SlicedMatrix mul_by_alpha(const SlicedMatrix& a) {
  const int e = a.degree();
  std::vector<BitMatrix> out(static_cast<std::size_t>(e));
  const BitMatrix& overflow = a.slice(e - 1);
  out[0] = BitMatrix(a.rows(), a.cols());
  for (int k = 1; k < e; ++k) out[static_cast<std::size_t>(k)] = a.slice(k - 1);
  const std::uint32_t f = a.field().modulus();
  for (int k = 0; k < e; ++k) {
    if ((f >> k) & 1u) out[static_cast<std::size_t>(k)] += overflow;
  }
  return SlicedMatrix(a.field_ptr(), std::move(out));
}

SlicedMatrix scalar_mul(const SlicedMatrix& a, Element c) { return slice(scalar_mul(cling(a), c)); }

}  // namespace gf2e
