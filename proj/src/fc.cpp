#include <stdexcept>
#include "qch/fc.hpp"

namespace qch {

FcSpec::FcSpec(RingElement a1, RingElement a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
  if (a1_.field() != a2_.field() || a1_.m() != a2_.m())
    throw std::invalid_argument("circulant blocks from different rings");
}

Matrix generator_rows(const FcSpec& spec) {
  const FieldSpec& f = spec.field();
  int m = spec.m();
  Matrix rows(f, 2 * m, 4 * m);
  auto put = [&](int br, int bc, const Matrix& block) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) rows.at(br * m + i, bc * m + j) = block.at(i, j);
  };
  put(0, 0, Matrix::identity(f, m));
  put(0, 2, circulant(spec.a1()));
  put(0, 3, circulant(spec.a2()));
  put(1, 1, Matrix::identity(f, m));
  put(1, 2, circulant(-spec.a2().conj()));
  put(1, 3, circulant(spec.a1().conj()));
  return rows;
}

LinearCode build_code(const FcSpec& spec) { return LinearCode::from_rows(generator_rows(spec)); }

int hull_dimension(const FcSpec& spec) {
  RingElement s = RingElement::one(spec.field(), spec.m()) +
                  spec.a1() * spec.a1().conj() + spec.a2() * spec.a2().conj();
  // The gcd argument is fixed by x -> x^(m-1), so its root set is closed under
  // inversion and the hull splits into dual pairs of constituents: always even.
  return 2 * gcd(s.lift(), xm_minus_one(spec.field(), spec.m())).degree();
}

bool is_lcd(const FcSpec& spec) { return hull_dimension(spec) == 0; }

bool is_lcp(const FcSpec& c, const FcSpec& d) {
  if (c.field() != d.field() || c.m() != d.m())
    throw std::invalid_argument("codes from different rings");
  RingElement d1 = c.a1() - d.a1();
  RingElement d2 = c.a2() - d.a2();
  RingElement s = d1 * d1.conj() + d2 * d2.conj();
  return gcd(s.lift(), xm_minus_one(c.field(), c.m())).degree() == 0;
}

}  // namespace qch
