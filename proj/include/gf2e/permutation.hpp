#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gf2e/packed_matrix.hpp"

namespace gf2e {

/// LAPACK-style permutation vector: step i swaps indices i and p[i], with
/// p[i] >= i. [0, 2, 2] swaps rows 1 and 2 and leaves row 0 alone.
class PermVector {
 public:
  PermVector() = default;
  explicit PermVector(std::size_t n);  // identity
  PermVector(std::initializer_list<std::size_t> entries);
  explicit PermVector(std::vector<std::size_t> entries);

  std::size_t size() const { return entries_.size(); }
  std::size_t operator[](std::size_t i) const { return entries_[i]; }
  std::size_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::size_t>& entries() const { return entries_; }

  /// Throws std::invalid_argument unless i <= p[i] < bound for all i.
  void validate(std::size_t bound) const;

  friend bool operator==(const PermVector&, const PermVector&) = default;

 private:
  std::vector<std::size_t> entries_;
};

enum class PermDirection { kForward, kBackward };

/// Forward applies swaps 0..len-1 in order; backward undoes them.
void apply_perm_rows(PackedMatrix& a, const PermVector& p, PermDirection dir);
void apply_perm_cols(PackedMatrix& a, const PermVector& q, PermDirection dir);

}  // namespace gf2e
