#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qch/gf.hpp"

namespace qch {

// Dense univariate polynomial over one FieldSpec, coefficients ascending with
// no trailing zeros.  The zero polynomial has an empty coefficient vector and
// no degree: degree() throws instead of returning a sentinel.
class Poly {
 public:
  // Zero polynomial.
  explicit Poly(const FieldSpec& f);
  // Prunes trailing zeros; all coefficients must share the field.
  Poly(const FieldSpec& f, std::vector<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  static Poly x(const FieldSpec& f);
  static Poly monomial(const FieldElement& c, int exp);
  // Ascending prime-subfield coefficients, handy for literals in tests.
  static Poly from_ints(const FieldSpec& f, const std::vector<long long>& coeffs);

  const FieldSpec& field() const { return *f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;  // throws std::logic_error on the zero polynomial
  // Coefficient of x^i; zero beyond the degree.
  FieldElement coeff(int i) const;
  FieldElement lead() const;  // throws on zero
  FieldElement eval(const FieldElement& x) const;
  bool is_monic() const;
  Poly monic() const;  // throws on zero

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const FieldElement& c) const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const;
  Poly operator%(const Poly& d) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  const FieldSpec* f_;
  std::vector<FieldElement> c_;
};

// Monic gcd; gcd(0, f) = monic(f), gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly xm_minus_one(const FieldSpec& f, int m);

// f(0)^-1 * x^deg(f) * f(1/x).  Errors: zero polynomial or f(0) = 0.
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);

// Residue class in GF(q)[x] / (x^m - 1), kept as the canonical representative
// of degree < m.  Requires m >= 1 and gcd(m, q) = 1 (the semisimple case all
// the hull machinery relies on).
class RingElement {
 public:
  RingElement(Poly lift, int m);

  static RingElement zero(const FieldSpec& f, int m);
  static RingElement one(const FieldSpec& f, int m);

  const FieldSpec& field() const { return lift_.field(); }
  int m() const { return m_; }
  const Poly& lift() const { return lift_; }
  bool is_zero() const { return lift_.is_zero(); }

  // The substitution x -> x^(m-1): coefficient of x^i moves to x^((m-i) mod m).
  // Ring automorphism; matches transposition of the associated circulant.
  RingElement conj() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;

  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

 private:
  void check_compatible(const RingElement& o) const;
  Poly lift_;
  int m_;
};

// Distinct monic irreducible factors of x^m - 1 over GF(q), split into the
// self-reciprocal ones and the reciprocal pairs (f, f*) with f the smaller
// member.  Both lists are sorted by degree, then by ascending coefficient
// sequence, so the output is deterministic.
struct FactorClassification {
  std::vector<Poly> self_reciprocal;
  std::vector<std::pair<Poly, Poly>> reciprocal_pairs;

  std::vector<Poly> all() const;  // flattened, same sort order
};

// Requires gcd(m, q) = 1 and k * ord_m(q) <= FieldSpec::max_degree (the
// splitting field must stay representable).
FactorClassification factor_xm_minus_one(const FieldSpec& f, int m);

// Canonical text form, e.g. "x^3+2x+2"; extension-field coefficients are
// written in the symbol a and parenthesized, e.g. "(a+1)x^3+a".
std::string to_string(const Poly& p);
std::string to_string(const FieldElement& e);
// Accepts the printed form plus benign variations (whitespace, "*", leading
// "-", bare a-power coefficients like "a^2x^8").  Throws std::invalid_argument
// on malformed input.
Poly parse_poly(const std::string& s, const FieldSpec& f);
FieldElement parse_element(const std::string& s, const FieldSpec& f);

}  // namespace qch
