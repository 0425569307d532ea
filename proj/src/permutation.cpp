#include "gf2e/permutation.hpp"

#include <stdexcept>
#include <string>

namespace gf2e {

PermVector::PermVector(std::size_t n) : entries_(n) {
  for (std::size_t i = 0; i < n; ++i) entries_[i] = i;
}

PermVector::PermVector(std::initializer_list<std::size_t> entries) : entries_(entries) {}

PermVector::PermVector(std::vector<std::size_t> entries) : entries_(std::move(entries)) {}

void PermVector::validate(std::size_t bound) const {
  if (entries_.size() > bound) throw std::invalid_argument("permutation vector longer than the dimension");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < i || entries_[i] >= bound) {
      throw std::invalid_argument("invalid permutation entry p[" + std::to_string(i) +
                                  "] = " + std::to_string(entries_[i]));
    }
  }
}

void apply_perm_rows(PackedMatrix& a, const PermVector& p, PermDirection dir) {
  p.validate(a.rows());
  if (dir == PermDirection::kForward) {
    for (std::size_t i = 0; i < p.size(); ++i) a.row_swap(i, p[i]);
  } else {
    for (std::size_t i = p.size(); i-- > 0;) a.row_swap(i, p[i]);
  }
}

void apply_perm_cols(PackedMatrix& a, const PermVector& q, PermDirection dir) {
  q.validate(a.cols());
  if (dir == PermDirection::kForward) {
    for (std::size_t i = 0; i < q.size(); ++i) a.col_swap(i, q[i]);
  } else {
    for (std::size_t i = q.size(); i-- > 0;) a.col_swap(i, q[i]);
  }
}

}  // namespace gf2e
