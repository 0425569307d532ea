#pragma once

#include <cstddef>
#include <vector>

#include "gf2e/bit_matrix.hpp"
#include "gf2e/field.hpp"
#include "gf2e/packed_matrix.hpp"

namespace gf2e {

/// Matrix over GF(2^e) kept as a polynomial with GF(2) matrix coefficients:
/// slice k holds the x^k coefficient of every entry.
class SlicedMatrix {
 public:
  SlicedMatrix() = default;
  SlicedMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Takes ownership of e slices of identical shape.
  SlicedMatrix(FieldPtr field, std::vector<BitMatrix> slices);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int degree() const { return field_->degree(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const BitMatrix& slice(int k) const { return slices_.at(static_cast<std::size_t>(k)); }
  BitMatrix& slice(int k) { return slices_.at(static_cast<std::size_t>(k)); }
  const std::vector<BitMatrix>& slices() const { return slices_; }

  Element get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Element x);

  bool is_zero() const;

  SlicedMatrix& operator+=(const SlicedMatrix& other);
  friend bool operator==(const SlicedMatrix& a, const SlicedMatrix& b) {
    return a.field_->modulus() == b.field_->modulus() && a.slices_ == b.slices_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitMatrix> slices_;
};

/// Packed -> sliced ("slicing").
SlicedMatrix slice(const PackedMatrix& a);
/// Sliced -> packed ("clinging").
PackedMatrix cling(const SlicedMatrix& a);

SlicedMatrix add(const SlicedMatrix& a, const SlicedMatrix& b);

/// alpha * A: slices move up one degree and the overflow of slice e-1 folds
/// into the slices named by the low coefficients of f.
SlicedMatrix mul_by_alpha(const SlicedMatrix& a);

/// c * A, computed in the packed layout.
SlicedMatrix scalar_mul(const SlicedMatrix& a, Element c);

}  // namespace gf2e
