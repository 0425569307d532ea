#pragma once

#include <array>
#include <utility>

namespace gf2e::detail {

/// One level of Strassen-Winograd over a field of characteristic two
/// (subtraction is addition). Takes the four quadrants of each operand and
/// a callable for the seven sub-products; returns C11, C12, C21, C22.
/// `M` needs a free function add(const M&, const M&) -> M.
template <class M, class Mul>
std::array<M, 4> winograd_step(const M& a11, const M& a12, const M& a21, const M& a22, const M& b11,
                               const M& b12, const M& b21, const M& b22, Mul&& mul) {
  M s1 = add(a21, a22);
  M s2 = add(s1, a11);
  M s3 = add(a11, a21);
  M s4 = add(a12, s2);
  M t1 = add(b12, b11);
  M t2 = add(b22, t1);
  M t3 = add(b22, b12);
  M t4 = add(t2, b21);

  M p1 = mul(a11, b11);
  M p2 = mul(a12, b21);
  M p3 = mul(s4, b22);
  M p4 = mul(a22, t4);
  M p5 = mul(s1, t1);
  M p6 = mul(s2, t2);
  M p7 = mul(s3, t3);

  M c11 = add(p1, p2);
  M u2 = add(p1, p6);
  M u3 = add(u2, p7);
  M u4 = add(u2, p5);
  M c12 = add(u4, p3);
  M c21 = add(u3, p4);
  M c22 = add(u3, p5);
  return {std::move(c11), std::move(c12), std::move(c21), std::move(c22)};
}

}  // namespace gf2e::detail
