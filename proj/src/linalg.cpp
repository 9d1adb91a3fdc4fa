#include "qch/linalg.hpp"

#include <stdexcept>

namespace qch {

namespace {
size_t checked_extent(int rows, int cols) {
  if (rows < 0 || cols < 1) throw std::invalid_argument("bad matrix shape");
  return static_cast<size_t>(rows) * cols;
}
}  // namespace

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : f_(&f), rows_(rows), cols_(cols), e_(checked_extent(rows, cols), FieldElement::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
  return m;
}

FieldElement& Matrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return e_[static_cast<size_t>(r) * cols_ + c];
}

const FieldElement& Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return e_[static_cast<size_t>(r) * cols_ + c];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (f_ != o.f_) throw std::invalid_argument("matrices over different fields");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r(*f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const FieldElement& a = at(i, l);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + a * o.at(l, j);
    }
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(*f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::conj_transposed() const {
  Matrix r(*f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj_sqrt_q();
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (f_ != below.f_) throw std::invalid_argument("matrices over different fields");
  if (cols_ != below.cols_) throw std::invalid_argument("column count mismatch");
  Matrix r(*f_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

RrefResult rref(const Matrix& a) {
  RrefResult res{a, 0, {}};
  Matrix& m = res.mat;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
    FieldElement inv = m.at(r, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      FieldElement t = m.at(i, col);
      if (t.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - t * m.at(r, j);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const Matrix& a) { return rref(a).rank; }

Matrix nullspace_rows(const Matrix& a) {
  RrefResult r = rref(a);
  const FieldSpec& f = a.field();
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : r.pivot_cols) is_pivot[c] = 1;
  Matrix ns(f, a.cols() - r.rank, a.cols());
  int row = 0;
  for (int fc = 0; fc < a.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    ns.at(row, fc) = FieldElement::one(f);
    for (int pr = 0; pr < r.rank; ++pr)
      ns.at(row, r.pivot_cols[pr]) = -r.mat.at(pr, fc);
    ++row;
  }
  return ns;
}

Matrix circulant(const RingElement& a) {
  int m = a.m();
  Matrix c(a.field(), m, m);
  const Poly& lift = a.lift();
  for (int j = 0; j < m; ++j) c.at(0, j) = lift.coeff(j);
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < m; ++j) c.at(i, j) = c.at(i - 1, (j + m - 1) % m);
  return c;
}

}  // namespace qch
