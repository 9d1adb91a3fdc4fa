#pragma once

#include <vector>

#include "qch/poly.hpp"

namespace qch {

// Dense row-major matrix over one FieldSpec.  Exact arithmetic only; all
// entries share the field by construction.  A matrix may have zero rows (the
// basis of the zero code) but always has cols >= 1.
class Matrix {
 public:
  Matrix(const FieldSpec& f, int rows, int cols);  // zero-filled
  static Matrix identity(const FieldSpec& f, int n);

  const FieldSpec& field() const { return *f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldElement& at(int r, int c);
  const FieldElement& at(int r, int c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix transposed() const;
  // Entrywise a -> a^sqrt(q), then transpose; requires square field order.
  Matrix conj_transposed() const;
  // Vertical stack; column counts and fields must agree.
  Matrix vstack(const Matrix& below) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  const FieldSpec* f_;
  int rows_, cols_;
  std::vector<FieldElement> e_;  // row-major
};

struct RrefResult {
  Matrix mat;
  int rank;
  std::vector<int> pivot_cols;
};

// Reduced row echelon form via Gauss-Jordan elimination with deterministic
// pivoting (leftmost pivot column, first nonzero row).  rref is idempotent,
// so it canonicalizes row spaces.
RrefResult rref(const Matrix& a);
int rank(const Matrix& a);

// Rows spanning { v : a v^T = 0 }, one per free column of rref(a).  The
// result has a.cols() - rank(a) rows.
Matrix nullspace_rows(const Matrix& a);

// m x m circulant whose first row holds the coefficients of a (ascending,
// zero-padded to length m); each later row is the right cyclic shift of the
// previous one.  Ring homomorphism from GF(q)[x]/(x^m - 1) to matrices, with
// circulant(a.conj()) = circulant(a) transposed.
Matrix circulant(const RingElement& a);

}  // namespace qch
