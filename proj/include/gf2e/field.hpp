#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace gf2e {

/// Elements of GF(2^e) are identified with the integer sum a_i 2^i of their
/// coefficient vector (a_{e-1}, ..., a_0).
using Element = std::uint32_t;

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 10;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Carry-less product of two polynomials over F_2 (degrees up to 31 each).
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

/// Remainder of `a` modulo `f` in F_2[x]; `f` must be nonzero.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f);

/// Degree of a polynomial over F_2 encoded as an integer, -1 for zero.
int poly_degree(std::uint64_t a);

/// Trial division against every polynomial of degree 1..deg(f)/2.
bool is_irreducible(std::uint64_t f);

/// True when x generates the multiplicative group of F_2[x]/<f>.
bool is_primitive(std::uint64_t f);

/// Minimal-weight irreducible polynomial used when no modulus is given.
std::uint32_t default_modulus(int degree);

/// GF(2^e) with full multiplication and inverse tables. Immutable once
/// built, so a single instance can be shared between matrices and threads.
class Field {
 public:
  /// Field with the default modulus of the given degree.
  explicit Field(int degree);

  /// Field with a caller-supplied modulus. Throws FieldError if `modulus` is
  /// not an irreducible polynomial of the given degree.
  Field(int degree, std::uint32_t modulus);

  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << degree_; }

  Element mul(Element a, Element b) const {
    return mul_table_[(static_cast<std::size_t>(a) << degree_) | b];
  }

  /// Row `a` of the multiplication table: mul_row(a)[b] == mul(a, b).
  const std::uint16_t* mul_row(Element a) const {
    return mul_table_.data() + (static_cast<std::size_t>(a) << degree_);
  }

  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;

  /// alpha^k for 0 <= k < e, where alpha is the class of x.
  Element alpha_pow(int k) const { return static_cast<Element>(1u << k); }

  /// Coefficients of x^d mod f for any d >= 0.
  Element x_power(int d) const;

  bool contains(Element a) const { return a < order(); }

 private:
  void build_tables();

  int degree_;
  std::uint32_t modulus_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shared, lazily built field with the default modulus. Thread safe.
FieldPtr default_field(int degree);

/// Builds a new shared field (default modulus when modulus == 0).
FieldPtr make_field(int degree, std::uint32_t modulus = 0);

}  // namespace gf2e
