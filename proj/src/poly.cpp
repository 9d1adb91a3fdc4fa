#include "qch/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qch {

Poly::Poly(const FieldSpec& f) : f_(&f) {}

Poly::Poly(const FieldSpec& f, std::vector<FieldElement> coeffs) : f_(&f), c_(std::move(coeffs)) {
  for (const FieldElement& c : c_)
    if (c.field() != f)
      throw std::invalid_argument("polynomial coefficient from a different field");
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) {
  return Poly(c.field(), std::vector<FieldElement>{c});
}

Poly Poly::x(const FieldSpec& f) {
  return Poly(f, {FieldElement::zero(f), FieldElement::one(f)});
}

Poly Poly::monomial(const FieldElement& c, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  std::vector<FieldElement> v(exp + 1, FieldElement::zero(c.field()));
  v[exp] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(const FieldSpec& f, const std::vector<long long>& coeffs) {
  std::vector<FieldElement> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(FieldElement::from_int(f, c));
  return Poly(f, std::move(v));
}

int Poly::degree() const {
  if (c_.empty()) throw std::logic_error("the zero polynomial has no degree");
  return static_cast<int>(c_.size()) - 1;
}

FieldElement Poly::coeff(int i) const {
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  if (i >= static_cast<int>(c_.size())) return FieldElement::zero(*f_);
  return c_[i];
}

FieldElement Poly::lead() const {
  if (c_.empty()) throw std::logic_error("the zero polynomial has no leading coefficient");
  return c_.back();
}

FieldElement Poly::eval(const FieldElement& x) const {
  if (x.field() != *f_) throw std::invalid_argument("evaluation point from a different field");
  FieldElement acc = FieldElement::zero(*f_);
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == FieldElement::one(*f_); }

Poly Poly::monic() const {
  if (c_.empty()) throw std::logic_error("cannot normalize the zero polynomial");
  return *this * c_.back().inv();
}

Poly Poly::operator+(const Poly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("polynomials over different fields");
  std::vector<FieldElement> v;
  size_t n = std::max(c_.size(), o.c_.size());
  v.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    FieldElement s = i < c_.size() ? c_[i] : FieldElement::zero(*f_);
    if (i < o.c_.size()) s = s + o.c_[i];
    v.push_back(s);
  }
  return Poly(*f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<FieldElement> v;
  v.reserve(c_.size());
  for (const FieldElement& c : c_) v.push_back(-c);
  return Poly(*f_, std::move(v));
}

Poly Poly::operator*(const FieldElement& c) const {
  if (c.field() != *f_) throw std::invalid_argument("scalar from a different field");
  std::vector<FieldElement> v;
  v.reserve(c_.size());
  for (const FieldElement& a : c_) v.push_back(a * c);
  return Poly(*f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return Poly(*f_);
  std::vector<FieldElement> v(c_.size() + o.c_.size() - 1, FieldElement::zero(*f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  }
  return Poly(*f_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (f_ != d.f_) throw std::invalid_argument("polynomials over different fields");
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (c_.empty() || c_.size() < d.c_.size()) return {Poly(*f_), *this};
  FieldElement lead_inv = d.lead().inv();
  std::vector<FieldElement> rem = c_;
  std::vector<FieldElement> quot(c_.size() - d.c_.size() + 1, FieldElement::zero(*f_));
  for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(d.c_.size()) - 1; --i) {
    if (rem[i].is_zero()) continue;
    FieldElement t = rem[i] * lead_inv;
    int shift = i - (static_cast<int>(d.c_.size()) - 1);
    quot[shift] = t;
    for (size_t j = 0; j < d.c_.size(); ++j)
      rem[shift + j] = rem[shift + j] - t * d.c_[j];
  }
  return {Poly(*f_, std::move(quot)), Poly(*f_, std::move(rem))};
}

Poly Poly::operator/(const Poly& d) const { return divmod(d).first; }
Poly Poly::operator%(const Poly& d) const { return divmod(d).second; }

bool Poly::operator==(const Poly& o) const {
  if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw std::invalid_argument("polynomials over different fields");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Poly xm_minus_one(const FieldSpec& f, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::vector<FieldElement> v(m + 1, FieldElement::zero(f));
  v[0] = -FieldElement::one(f);
  v[m] = FieldElement::one(f);
  return Poly(f, std::move(v));
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
  if (f.coeff(0).is_zero())
    throw std::invalid_argument("reciprocal needs a nonzero constant term");
  int d = f.degree();
  std::vector<FieldElement> v;
  v.reserve(d + 1);
  for (int i = d; i >= 0; --i) v.push_back(f.coeff(i));
  return Poly(f.field(), std::move(v)) * f.coeff(0).inv();
}

bool is_self_reciprocal(const Poly& f) { return reciprocal(f) == f; }

RingElement::RingElement(Poly lift, int m) : lift_(lift.field()), m_(m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (m % lift.field().p() == 0)
    throw std::invalid_argument("m must be coprime to the field characteristic");
  if (lift.is_zero()) {
    lift_ = std::move(lift);
    return;
  }
  std::vector<FieldElement> v(m, FieldElement::zero(lift.field()));
  for (int i = 0; i <= lift.degree(); ++i) v[i % m] = v[i % m] + lift.coeff(i);
  lift_ = Poly(lift.field(), std::move(v));
}

RingElement RingElement::zero(const FieldSpec& f, int m) { return RingElement(Poly(f), m); }

RingElement RingElement::one(const FieldSpec& f, int m) {
  return RingElement(Poly::constant(FieldElement::one(f)), m);
}

RingElement RingElement::conj() const {
  if (lift_.is_zero()) return *this;
  std::vector<FieldElement> v(m_, FieldElement::zero(field()));
  for (int i = 0; i <= lift_.degree(); ++i) v[(m_ - i) % m_] = lift_.coeff(i);
  return RingElement(Poly(field(), std::move(v)), m_);
}

void RingElement::check_compatible(const RingElement& o) const {
  if (field() != o.field() || m_ != o.m_)
    throw std::invalid_argument("ring elements from different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_compatible(o);
  return RingElement(lift_ + o.lift_, m_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_compatible(o);
  return RingElement(lift_ - o.lift_, m_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_compatible(o);
  return RingElement(lift_ * o.lift_, m_);
}

RingElement RingElement::operator-() const { return RingElement(-lift_, m_); }

bool RingElement::operator==(const RingElement& o) const {
  return m_ == o.m_ && lift_ == o.lift_;
}

std::vector<Poly> FactorClassification::all() const {
  std::vector<Poly> v = self_reciprocal;
  for (const auto& pr : reciprocal_pairs) {
    v.push_back(pr.first);
    v.push_back(pr.second);
  }
  return v;
}

namespace {

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// An element of multiplicative order exactly n, found by walking candidates in
// enumeration order and raising each to the cofactor (order - 1)/n.
// Deterministic; n must divide the group order.
FieldElement element_of_order(const FieldSpec& f, long long n) {
  uint128 group = f.order() - 1;
  if (group % static_cast<uint128>(n) != 0)
    throw std::logic_error("order does not divide the multiplicative group");
  uint128 cofactor = group / static_cast<uint128>(n);
  std::vector<long long> ps = prime_factors(n);
  FieldElement one = FieldElement::one(f);
  for (long long j = 1; j < 10'000; ++j) {
    FieldElement x = FieldElement::from_index(f, j).pow(cofactor);
    bool ok = !x.is_zero();
    for (long long r : ps)
      if (ok && x.pow(static_cast<uint128>(n / r)) == one) ok = false;
    if (ok) return x;
  }
  throw std::logic_error("no element of the requested order found");
}

// Sort key: degree, then coefficient indices from the constant term up.
bool poly_less(const Poly& a, const Poly& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i <= da; ++i) {
    long long ia = a.coeff(i).index(), ib = b.coeff(i).index();
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

FactorClassification factor_xm_minus_one(const FieldSpec& f, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (m % f.p() == 0)
    throw std::invalid_argument("m must be coprime to the field characteristic");

  FactorClassification out;
  if (m == 1) {
    out.self_reciprocal.push_back(xm_minus_one(f, 1));
    return out;
  }

  // Degree of the splitting field GF(q^e): the multiplicative order of q mod m.
  long long qm = f.q() % m;
  int e = 1;
  for (long long t = qm; t != 1; t = t * qm % m) {
    if (++e > m) throw std::logic_error("order computation did not terminate");
  }
  if (f.k() * e > FieldSpec::max_degree)
    throw std::invalid_argument("splitting field degree k*ord_m(q) exceeds " +
                                std::to_string(FieldSpec::max_degree));

  const FieldSpec& big =
      e == 1 ? f : FieldSpec::make(f.p(), f.k() * e, lex_min_irreducible(f.p(), f.k() * e));
  FieldElement xi = element_of_order(big, m);

  // Embedding of GF(q) into the splitting field, as an index-keyed lookup in
  // both directions.  For prime q this is just the constant inclusion; for
  // extension bases we send the symbol a to a root of the base modulus found
  // inside the subfield cycle of order q - 1.
  std::map<std::vector<uint8_t>, FieldElement> down_map;
  auto big_key = [&](const FieldElement& z) {
    std::vector<uint8_t> key(big.k());
    for (int i = 0; i < big.k(); ++i) key[i] = static_cast<uint8_t>(z.rep(i));
    return key;
  };
  {
    FieldElement rho = FieldElement::zero(big);  // image of the symbol a
    if (e == 1) {
      // big == f; identity embedding.
    } else if (f.k() > 1) {
      Poly mu = Poly::from_ints(big, std::vector<long long>(f.modulus().begin(),
                                                            f.modulus().end()));
      FieldElement w = element_of_order(big, f.q() - 1);
      FieldElement cand = FieldElement::one(big);
      bool found = false;
      for (long long t = 0; t < f.q() - 1; ++t) {
        if (mu.eval(cand).is_zero()) {
          rho = cand;
          found = true;
          break;
        }
        cand = cand * w;
      }
      if (!found) throw std::logic_error("base modulus has no root in the splitting field");
    }
    for (long long idx = 0; idx < f.q(); ++idx) {
      FieldElement c = FieldElement::from_index(f, idx);
      FieldElement img = e == 1 ? c : FieldElement::zero(big);
      if (e != 1) {
        FieldElement apow = FieldElement::one(big);
        for (int i = 0; i < f.k(); ++i) {
          img = img + apow * FieldElement::from_int(big, c.rep(i));
          apow = apow * rho;
        }
      }
      down_map.emplace(big_key(img), c);
    }
  }

  // q-cyclotomic cosets mod m; each is the exponent set of one irreducible
  // factor, the minimal polynomial of xi^c over GF(q).
  std::vector<Poly> factors;
  std::vector<char> seen(m, 0);
  for (int c = 0; c < m; ++c) {
    if (seen[c]) continue;
    Poly fac = Poly::constant(FieldElement::one(big));
    for (long long i = c; !seen[i]; i = i * qm % m) {
      seen[i] = 1;
      fac = fac * Poly(big, {-xi.pow(static_cast<uint128>(i)), FieldElement::one(big)});
    }
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= fac.degree(); ++i) {
      auto it = down_map.find(big_key(fac.coeff(i)));
      if (it == down_map.end())
        throw std::logic_error("factor coefficient fell outside the base field");
      coeffs.push_back(it->second);
    }
    factors.push_back(Poly(f, std::move(coeffs)));
  }

  std::sort(factors.begin(), factors.end(), poly_less);
  std::vector<char> used(factors.size(), 0);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    Poly rec = reciprocal(factors[i]);
    if (rec == factors[i]) {
      out.self_reciprocal.push_back(factors[i]);
      continue;
    }
    bool paired = false;
    for (size_t j = i + 1; j < factors.size(); ++j) {
      if (!used[j] && factors[j] == rec) {
        used[j] = 1;
        paired = true;
        break;
      }
    }
    if (!paired) throw std::logic_error("reciprocal partner missing from factor list");
    out.reciprocal_pairs.emplace_back(factors[i], rec);
  }
  return out;
}

// ---- text form ----

namespace {

void append_element(std::string& s, const FieldElement& e) {
  const FieldSpec& f = e.field();
  if (e.is_zero()) {
    s += '0';
    return;
  }
  bool first = true;
  for (int i = f.k() - 1; i >= 0; --i) {
    int c = e.rep(i);
    if (c == 0) continue;
    if (!first) s += '+';
    first = false;
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += 'a';
    if (i > 1) {
      s += '^';
      s += std::to_string(i);
    }
  }
}

void append_term(std::string& s, const FieldElement& c, int exp) {
  const FieldSpec& f = c.field();
  if (exp == 0) {
    append_element(s, c);
    return;
  }
  if (c != FieldElement::one(f)) {
    bool simple = f.prime_field();
    if (!simple) s += '(';
    append_element(s, c);
    if (!simple) s += ')';
  }
  s += 'x';
  if (exp > 1) {
    s += '^';
    s += std::to_string(exp);
  }
}

}  // namespace

std::string to_string(const FieldElement& e) {
  std::string s;
  append_element(s, e);
  return s;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    FieldElement c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!s.empty()) s += '+';
    append_term(s, c, i);
  }
  return s;
}

namespace {

struct Cursor {
  std::string s;  // whitespace already removed
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  char take() { return s[pos++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + s + "' at position " +
                                std::to_string(pos) + ": " + why);
  }
};

long long parse_uint(Cursor& c) {
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number");
  long long v = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.take() - '0');
    if (v > 1'000'000'000) c.fail("number too large");
  }
  return v;
}

constexpr int kMaxExponent = 4096;

int parse_exponent(Cursor& c) {
  long long e = parse_uint(c);
  if (e > kMaxExponent) c.fail("exponent too large");
  return static_cast<int>(e);
}

// c [ '*' ] a [ '^' e ] | c | a [ '^' e ]  summed with +/- separators.
FieldElement parse_element_expr(Cursor& c, const FieldSpec& f) {
  FieldElement acc = FieldElement::zero(f);
  bool any = false;
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') sign = c.take() == '-' ? -1 : 1;
  while (true) {
    FieldElement coeff = FieldElement::one(f);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = FieldElement::from_int(f, parse_uint(c));
      have_coeff = true;
      if (c.peek() == '*') c.take();
    }
    if (c.peek() == 'a') {
      c.take();
      if (f.prime_field()) c.fail("symbol a is only defined for extension fields");
      int e = 1;
      if (c.peek() == '^') {
        c.take();
        e = parse_exponent(c);
      }
      coeff = coeff * FieldElement::symbol_a(f).pow(static_cast<uint128>(e));
    } else if (!have_coeff) {
      c.fail("expected a coefficient");
    }
    if (sign < 0) coeff = -coeff;
    acc = acc + coeff;
    any = true;
    if (c.done() || c.peek() == ')') break;
    char op = c.take();
    if (op == '+')
      sign = 1;
    else if (op == '-')
      sign = -1;
    else
      c.fail("expected '+' or '-'");
  }
  if (!any) c.fail("empty element");
  return acc;
}

std::string strip_ws(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  return t;
}

}  // namespace

FieldElement parse_element(const std::string& s, const FieldSpec& f) {
  Cursor c{strip_ws(s)};
  if (c.done()) c.fail("empty input");
  FieldElement e = parse_element_expr(c, f);
  if (!c.done()) c.fail("trailing input");
  return e;
}

Poly parse_poly(const std::string& s, const FieldSpec& f) {
  Cursor c{strip_ws(s)};
  if (c.done()) c.fail("empty input");
  Poly acc(f);
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') sign = c.take() == '-' ? -1 : 1;
  while (true) {
    FieldElement coeff = FieldElement::one(f);
    bool have_coeff = false;
    if (c.peek() == '(') {
      c.take();
      coeff = parse_element_expr(c, f);
      if (c.peek() != ')') c.fail("expected ')'");
      c.take();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = FieldElement::from_int(f, parse_uint(c));
      have_coeff = true;
    } else if (c.peek() == 'a') {
      c.take();
      if (f.prime_field()) c.fail("symbol a is only defined for extension fields");
      int e = 1;
      if (c.peek() == '^') {
        c.take();
        e = parse_exponent(c);
      }
      coeff = FieldElement::symbol_a(f).pow(static_cast<uint128>(e));
      have_coeff = true;
    }
    if (c.peek() == '*') c.take();
    int exp = 0;
    if (c.peek() == 'x') {
      c.take();
      exp = 1;
      if (c.peek() == '^') {
        c.take();
        exp = parse_exponent(c);
      }
    } else if (!have_coeff) {
      c.fail("expected a term");
    }
    if (sign < 0) coeff = -coeff;
    acc = acc + Poly::monomial(coeff, exp);
    if (c.done()) break;
    char op = c.take();
    if (op == '+')
      sign = 1;
    else if (op == '-')
      sign = -1;
    else
      c.fail("expected '+' or '-'");
  }
  return acc;
}

}  // namespace qch
