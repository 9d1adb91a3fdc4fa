#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qch/linalg.hpp"

namespace qch {

// A linear [n, k] code over GF(q), held as the RREF basis of its row space so
// equal codes compare equal.  k may be 0 (the zero code, spanned by nothing).
class LinearCode {
 public:
  // Row space of an arbitrary nonempty matrix; zero rows are dropped.
  static LinearCode from_rows(const Matrix& rows);

  const FieldSpec& field() const { return basis_.field(); }
  int n() const { return basis_.cols(); }
  int k() const { return basis_.rows(); }
  // k x n, in RREF with full row rank.
  const Matrix& basis() const { return basis_; }

  bool operator==(const LinearCode& o) const { return basis_ == o.basis_; }
  bool operator!=(const LinearCode& o) const { return !(*this == o); }

 private:
  explicit LinearCode(Matrix basis) : basis_(std::move(basis)) {}
  friend LinearCode dual(const LinearCode& c);
  Matrix basis_;
};

LinearCode dual(const LinearCode& c);

// dim(C intersect C-dual) = k - rank(G G^T), computed by matrix rank alone.
// This is the independent check the closed-form gcd characterizations are
// validated against.
int hull_dimension(const LinearCode& c);
// Hermitian variant, k - rank(G conj(G)^T); requires square field order.
int hermitian_hull_dimension(const LinearCode& c);
// dim(C intersect D) = k_C + k_D - rank of the stacked bases.
int intersection_dimension(const LinearCode& c, const LinearCode& d);

// Thrown when a weight enumeration would exceed its budget.  Carries the best
// (smallest) codeword weight seen so far, which upper-bounds the true minimum
// distance, and how many codewords were examined.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string msg, int partial, unsigned long long examined)
      : std::runtime_error(std::move(msg)),
        partial_upper_bound(partial),
        examined(examined) {}
  int partial_upper_bound;
  unsigned long long examined;
};

inline constexpr unsigned long long kDefaultDistanceBudget = 100'000'000ULL;

struct DistanceScan {
  std::optional<int> exact;  // set when the scan completed without stopping early
  int upper_bound = 0;       // smallest weight seen; equals *exact when exact
  unsigned long long examined = 0;
  bool pruned = false;      // minimum known to be <= floor, scan abandoned
  bool budget_hit = false;  // ran out of budget before finishing
};

// Engine behind min_distance: enumerates one codeword per scalar class (first
// nonzero message coordinate fixed to 1, (q^k - 1)/(q - 1) weight checks in
// total) and stops early either when the running minimum reaches `floor` or
// below -- which is how searches discard candidates that cannot beat the
// incumbent -- or when `budget` codewords have been examined.
DistanceScan distance_scan(const LinearCode& c, int floor, unsigned long long budget);

// Exact minimum Hamming weight; requires k >= 1.  Throws BudgetExceeded (with
// the best upper bound seen) once more than `budget` codewords are examined.
int min_distance(const LinearCode& c, unsigned long long budget = kDefaultDistanceBudget);

// min{ d(C), d(dual(D)) }: what a complementary pair (C, D) guarantees
// against both fault injection (via C) and leakage (via the dual of D).
int security_parameter(const LinearCode& c, const LinearCode& d,
                       unsigned long long budget = kDefaultDistanceBudget);

}  // namespace qch
