#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qch {

using uint128 = unsigned __int128;

class FieldElement;

// One finite field GF(p^k).  Elements are polynomials in a symbol `a` over
// GF(p), reduced modulo a monic irreducible modulus of degree k (coefficients
// stored ascending, constant term first).  Instances are interned: make()
// returns a reference valid for the lifetime of the program, and two calls
// with identical (p, k, modulus) return the same object, so field identity is
// pointer identity and mixed-field arithmetic can be rejected cheaply.
class FieldSpec {
 public:
  // Maximum extension degree any element representation supports.  Splitting
  // fields built internally go up to this bound.
  static constexpr int max_degree = 32;

  // modulus lists coefficients ascending and must be monic irreducible of
  // degree k over GF(p).  When omitted, a pinned table of least irreducibles
  // covers p in {2,3,5,7} up to p^k <= 343, and lex_min_irreducible supplies
  // the rest, so every element of an interned field prints the same way
  // across runs.
  static const FieldSpec& make(int p, int k);
  static const FieldSpec& make(int p, int k, const std::vector<long long>& modulus);
  // Convenience for a prime-power order with the default modulus, e.g. 9 -> GF(3^2).
  static const FieldSpec& of_order(long long q);

  int p() const { return p_; }
  int k() const { return k_; }
  // Field order as a plain integer; throws std::overflow_error for the very
  // large internal splitting fields that exceed long long.
  long long q() const;
  uint128 order() const { return order_; }
  bool prime_field() const { return k_ == 1; }
  bool square_order() const { return k_ % 2 == 0; }
  // Modulus coefficients ascending, length k+1, monic.
  const std::vector<uint8_t>& modulus() const { return mod_; }

  bool operator==(const FieldSpec& o) const { return this == &o; }
  bool operator!=(const FieldSpec& o) const { return this != &o; }

 private:
  FieldSpec(int p, int k, std::vector<uint8_t> mod);
  int p_;
  int k_;
  uint128 order_;
  std::vector<uint8_t> mod_;
};

// Value type for one element of a FieldSpec.  Cheap to copy (no heap); all
// binary operations require both operands to come from the same interned
// field and throw std::invalid_argument otherwise.  Immutable by convention:
// operations return new values.
class FieldElement {
 public:
  FieldElement() = delete;

  static FieldElement zero(const FieldSpec& f);
  static FieldElement one(const FieldSpec& f);
  // The residue class of the symbol `a`; requires k >= 2.
  static FieldElement symbol_a(const FieldSpec& f);
  // Elements are enumerable: index = sum rep[i] * p^i, 0 <= index < q.
  static FieldElement from_index(const FieldSpec& f, long long index);
  // Prime-subfield value (any integer, reduced mod p).
  static FieldElement from_int(const FieldSpec& f, long long c);

  const FieldSpec& field() const { return *f_; }
  long long index() const;
  bool is_zero() const;
  // Coefficient of a^i in the representation, 0 <= i < k.
  int rep(int i) const { return c_[i]; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(uint128 e) const;
  // a -> a^sqrt(q), the automorphism used for Hermitian transposes; requires
  // square field order.
  FieldElement conj_sqrt_q() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  explicit FieldElement(const FieldSpec& f);
  void check_same_field(const FieldElement& o) const;
  const FieldSpec* f_;
  std::array<uint8_t, FieldSpec::max_degree> c_;
};

// Least element (by index) whose square is -1, if any.  Exists exactly when
// q is even or q = 1 (mod 4); q = 3 (mod 4) yields nullopt.
std::optional<FieldElement> sqrt_of_minus_one(const FieldSpec& f);

// Least monic irreducible of degree k over GF(p), in element enumeration
// order (coefficient vector read as a base-p integer, constant term least
// significant).  Deterministic; used for the pinned default moduli and for
// internal splitting fields.
std::vector<long long> lex_min_irreducible(int p, int k);

// True when the monic polynomial given by ascending coefficients is
// irreducible over GF(p).
bool is_irreducible_over_prime_field(int p, const std::vector<long long>& coeffs);

}  // namespace qch
