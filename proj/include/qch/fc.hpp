#pragma once

#include "qch/code.hpp"

namespace qch {

// Four-circulant code over GF(q): the [4m, 2m] code with generator matrix
//
//   [ I  0  circ(a1)        circ(a2)       ]
//   [ 0  I  -circ(a2)^T     circ(a1)^T     ]
//
// where transposing a circulant is the substitution x -> x^(m-1) on its
// defining ring element.  The identity blocks force dimension exactly 2m.
class FcSpec {
 public:
  // a1 and a2 must share m and the field.
  FcSpec(RingElement a1, RingElement a2);

  const FieldSpec& field() const { return a1_.field(); }
  int m() const { return a1_.m(); }
  const RingElement& a1() const { return a1_; }
  const RingElement& a2() const { return a2_; }

 private:
  RingElement a1_, a2_;
};

// 2m x 4m block matrix shown above (already full rank, not row reduced).
Matrix generator_rows(const FcSpec& spec);
LinearCode build_code(const FcSpec& spec);

// Closed form: 2 * deg gcd( 1 + a1 a1(x^(m-1)) + a2 a2(x^(m-1)) mod (x^m - 1),
// x^m - 1 ).  The gcd argument is self-reciprocal, which is why four-circulant
// hulls always come out even.
int hull_dimension(const FcSpec& spec);
bool is_lcd(const FcSpec& spec);

// Complementary-pair test for two four-circulant codes over the same (q, m):
// gcd( sum_t (a_t - b_t)(a_t(x^(m-1)) - b_t(x^(m-1))) mod (x^m - 1),
// x^m - 1 ) = 1.
bool is_lcp(const FcSpec& c, const FcSpec& d);

}  // namespace qch
