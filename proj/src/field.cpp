#include "gf2e/field.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <string>

namespace gf2e {

namespace {

void check_degree(int degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw FieldError("extension degree must be in [" + std::to_string(kMinDegree) + ", " +
                     std::to_string(kMaxDegree) + "], got " + std::to_string(degree));
  }
}

std::string to_hex(std::uint32_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  do {
    out.insert(out.begin(), kDigits[v & 0xf]);
    v >>= 4;
  } while (v);
  return "0x" + out;
}

}  // namespace

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1u) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return r;
}

int poly_degree(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = poly_degree(f);
  if (df < 0) throw std::domain_error("polynomial division by zero");
  for (int d = poly_degree(a); d >= df; d = poly_degree(a)) a ^= f << (d - df);
  return a;
}

bool is_irreducible(std::uint64_t f) {
  const int d = poly_degree(f);
  if (d < 1) return false;
  // every reducible f has a factor of degree <= d/2
  for (std::uint64_t g = 2; poly_degree(g) <= d / 2; ++g) {
    if (poly_mod(f, g) == 0) return false;
  }
  return true;
}

bool is_primitive(std::uint64_t f) {
  if (!is_irreducible(f)) return false;
  const int d = poly_degree(f);
  const std::uint64_t group_order = (std::uint64_t{1} << d) - 1;
  std::uint64_t x = 1;
  for (std::uint64_t k = 1; k <= group_order; ++k) {
    x = poly_mod(x << 1, f);
    if (x == 1) return k == group_order;
  }
  return false;
}

std::uint32_t default_modulus(int degree) {
  check_degree(degree);
  static constexpr std::array<std::uint32_t, kMaxDegree + 1> kModuli = {
      0,
      0,
      0b111,            // x^2 + x + 1
      0b1011,           // x^3 + x + 1
      0b10011,          // x^4 + x + 1
      0b100101,         // x^5 + x^2 + 1
      0b1000011,        // x^6 + x + 1
      0b10000011,       // x^7 + x + 1
      0b100011101,      // x^8 + x^4 + x^3 + x^2 + 1
      0b1000010001,     // x^9 + x^4 + 1
      0b10000001001,    // x^10 + x^3 + 1
  };
  return kModuli[static_cast<std::size_t>(degree)];
}

Field::Field(int degree) : Field(degree, default_modulus(degree)) {}

Field::Field(int degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
  check_degree(degree);
  if (poly_degree(modulus) != degree) {
    throw FieldError("modulus " + to_hex(modulus) + " does not have degree " +
                     std::to_string(degree));
  }
  if (!is_irreducible(modulus)) {
    throw FieldError("modulus " + to_hex(modulus) + " is reducible over F_2");
  }
  build_tables();
}

void Field::build_tables() {
  const std::uint32_t q = order();
  mul_table_.assign(static_cast<std::size_t>(q) * q, 0);
  inv_table_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = a; b < q; ++b) {
      const auto p = static_cast<std::uint16_t>(poly_mod(clmul(a, b), modulus_));
      mul_table_[(static_cast<std::size_t>(a) << degree_) | b] = p;
      mul_table_[(static_cast<std::size_t>(b) << degree_) | a] = p;
      if (p == 1) {
        inv_table_[a] = static_cast<std::uint16_t>(b);
        inv_table_[b] = static_cast<std::uint16_t>(a);
      }
    }
  }
}

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(2^e)");
  return inv_table_[a];
}

Element Field::x_power(int d) const {
  Element r = 1;
  for (int i = 0; i < d; ++i) {
    r <<= 1;
    if (r >> degree_) r ^= modulus_;
  }
  return r;
}

FieldPtr default_field(int degree) {
  check_degree(degree);
  static std::array<FieldPtr, kMaxDegree + 1> cache;
  static std::array<std::once_flag, kMaxDegree + 1> once;
  const auto idx = static_cast<std::size_t>(degree);
  std::call_once(once[idx], [&] { cache[idx] = std::make_shared<const Field>(degree); });
  return cache[idx];
}

FieldPtr make_field(int degree, std::uint32_t modulus) {
  if (modulus == 0) return default_field(degree);
  return std::make_shared<const Field>(degree, modulus);
}

}  // namespace gf2e
