#pragma once

#include <vector>

#include "qch/code.hpp"

namespace qch {

// One-generator quasi-cyclic code of index ell: the cyclic module generated
// by (a_1(x), ..., a_ell(x)) inside (GF(q)[x]/(x^m - 1))^ell.  Its generator
// matrix is the m x (ell*m) row of circulants [circ(a_1) | ... | circ(a_ell)].
class QcSpec {
 public:
  // At least one generator; all must share m and the field.
  explicit QcSpec(std::vector<RingElement> generators);

  const FieldSpec& field() const { return gens_.front().field(); }
  int m() const { return gens_.front().m(); }
  int ell() const { return static_cast<int>(gens_.size()); }
  const std::vector<RingElement>& generators() const { return gens_; }

 private:
  std::vector<RingElement> gens_;
};

// Double-circulant convenience: the 2-QC code generated by (1, a).  Always
// maximal, so it is an [2m, m] code.
class DcSpec {
 public:
  explicit DcSpec(RingElement a) : a_(std::move(a)) {}

  const FieldSpec& field() const { return a_.field(); }
  int m() const { return a_.m(); }
  const RingElement& a() const { return a_; }
  QcSpec as_qc() const;

 private:
  RingElement a_;
};

// gcd(a_1, ..., a_ell, x^m - 1), monic.  The code is the g-multiples row
// module, of dimension m - deg g.
Poly generator_poly(const QcSpec& spec);
// h = (x^m - 1) / g; dim C = deg h.
Poly parity_check_poly(const QcSpec& spec);
// g = 1, i.e. the code has the maximal dimension m.
bool is_maximal(const QcSpec& spec);

// m x (ell*m) block row of circulants (not row reduced).
Matrix generator_rows(const QcSpec& spec);
LinearCode build_code(const QcSpec& spec);

// Closed form: deg gcd( sum_r a_r(x) a_r(x^(m-1)) mod (x^m - 1), h(x) ).
// When the sum vanishes the gcd convention makes this deg h, the whole code.
int hull_dimension(const QcSpec& spec);
bool is_lcd(const QcSpec& spec);
// Necessary condition for LCD (not sufficient): g is self-reciprocal.
bool generator_is_self_reciprocal(const QcSpec& spec);

// Complementary-pair test for two maximal 2-QC codes over the same (q, m):
// C + D = GF(q)^2m with trivial intersection iff
// gcd(a_1 b_2 - a_2 b_1, x^m - 1) = 1.  Throws std::invalid_argument unless
// both specs are maximal with ell = 2 (the only shape one-generator QC
// complementary pairs can take).
bool is_lcp(const QcSpec& c, const QcSpec& d);

// deg gcd( 1 + a(x) a(x^(m-1)) mod (x^m - 1), x^m - 1 ).
int hull_dimension(const DcSpec& spec);
bool is_lcd(const DcSpec& spec);

// A double-circulant code with hull dimension exactly 1; exists iff q is even
// or q = 1 (mod 4), and throws std::invalid_argument for q = 3 (mod 4).
// For odd q: a = x - (s + 1) with s the least square root of -1.  For even q:
// a = u + (u(1) + 1) with u = (x^m - 1)/(x - 1).
DcSpec construct_dc_hull_one(const FieldSpec& f, int m);

// Exhaustively sweeps all q^m double-circulant codes and reports whether none
// has odd hull dimension.  Intended for q = 3 (mod 4), where odd hull
// dimensions are impossible; requires q^m <= budget.
bool no_odd_dc_hull(const FieldSpec& f, int m, unsigned long long budget = 10'000'000ULL);

}  // namespace qch
