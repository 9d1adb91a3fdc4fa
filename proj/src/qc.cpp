#include <stdexcept>
#include "qch/qc.hpp"

namespace qch {

QcSpec::QcSpec(std::vector<RingElement> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("at least one generator block required");
  for (const RingElement& g : gens_)
    if (g.field() != gens_.front().field() || g.m() != gens_.front().m())
      throw std::invalid_argument("generator blocks from different rings");
}

QcSpec DcSpec::as_qc() const {
  return QcSpec({RingElement::one(field(), m()), a_});
}

Poly generator_poly(const QcSpec& spec) {
  Poly g = xm_minus_one(spec.field(), spec.m());
  for (const RingElement& a : spec.generators()) g = gcd(g, a.lift());
  return g;
}

Poly parity_check_poly(const QcSpec& spec) {
  return xm_minus_one(spec.field(), spec.m()) / generator_poly(spec);
}

bool is_maximal(const QcSpec& spec) { return generator_poly(spec).degree() == 0; }

Matrix generator_rows(const QcSpec& spec) {
  int m = spec.m();
  Matrix rows(spec.field(), m, spec.ell() * m);
  for (int b = 0; b < spec.ell(); ++b) {
    Matrix circ = circulant(spec.generators()[b]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) rows.at(i, b * m + j) = circ.at(i, j);
  }
  return rows;
}

LinearCode build_code(const QcSpec& spec) { return LinearCode::from_rows(generator_rows(spec)); }

int hull_dimension(const QcSpec& spec) {
  RingElement s = RingElement::zero(spec.field(), spec.m());
  for (const RingElement& a : spec.generators()) s = s + a * a.conj();
  // gcd(0, h) = h: a vanishing sum means the whole code is its own hull.
  return gcd(s.lift(), parity_check_poly(spec)).degree();
}

bool is_lcd(const QcSpec& spec) { return hull_dimension(spec) == 0; }

bool generator_is_self_reciprocal(const QcSpec& spec) {
  return is_self_reciprocal(generator_poly(spec));
}

bool is_lcp(const QcSpec& c, const QcSpec& d) {
  if (c.field() != d.field() || c.m() != d.m())
    throw std::invalid_argument("codes from different rings");
  if (c.ell() != 2 || d.ell() != 2 || !is_maximal(c) || !is_maximal(d))
    throw std::invalid_argument(
        "complementary-pair test requires two maximal 2-QC codes");
  const RingElement& a1 = c.generators()[0];
  const RingElement& a2 = c.generators()[1];
  const RingElement& b1 = d.generators()[0];
  const RingElement& b2 = d.generators()[1];
  RingElement det = a1 * b2 - a2 * b1;
  return gcd(det.lift(), xm_minus_one(c.field(), c.m())).degree() == 0;
}

int hull_dimension(const DcSpec& spec) {
  RingElement s = RingElement::one(spec.field(), spec.m()) + spec.a() * spec.a().conj();
  return gcd(s.lift(), xm_minus_one(spec.field(), spec.m())).degree();
}

bool is_lcd(const DcSpec& spec) { return hull_dimension(spec) == 0; }

DcSpec construct_dc_hull_one(const FieldSpec& f, int m) {
  if (f.p() == 2) {
    // a = u + (u(1) + 1) with u = 1 + x + ... + x^(m-1): every root of unity
    // other than 1 kills u, so 1 + a(x)a(x^(m-1)) vanishes only at x = 1.
    std::vector<FieldElement> u(m, FieldElement::one(f));
    Poly up(f, u);
    FieldElement beta = up.eval(FieldElement::one(f));
    Poly a = up + Poly::constant(beta + FieldElement::one(f));
    return DcSpec(RingElement(a, m));
  }
  if (f.q() % 4 == 3)
    throw std::invalid_argument(
        "hull dimension 1 is impossible for double-circulant codes when q = 3 (mod 4)");
  FieldElement s = *sqrt_of_minus_one(f);
  Poly a = Poly::x(f) - Poly::constant(s + FieldElement::one(f));
  return DcSpec(RingElement(a, m));
}

bool no_odd_dc_hull(const FieldSpec& f, int m, unsigned long long budget) {
  uint128 total = 1;
  for (int i = 0; i < m; ++i) {
    total *= static_cast<uint128>(f.order());
    if (total > static_cast<uint128>(budget))
      throw BudgetExceeded("q^m exceeds the exhaustive sweep budget", -1, 0);
  }
  long long q = f.q();
  std::vector<long long> digit(m, 0);
  while (true) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(m);
    for (int i = 0; i < m; ++i) coeffs.push_back(FieldElement::from_index(f, digit[i]));
    DcSpec spec{RingElement(Poly(f, std::move(coeffs)), m)};
    if (hull_dimension(spec) % 2 == 1) return false;
    int pos = 0;
    while (pos < m && ++digit[pos] == q) digit[pos++] = 0;
    if (pos == m) break;
  }
  return true;
}

}  // namespace qch
