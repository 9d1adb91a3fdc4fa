#include "qch/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qch {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mod_p(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

// GF(p)[y] helpers on plain coefficient vectors (ascending), used for modulus
// validation before any field object exists.
using PVec = std::vector<int>;

void prune(PVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, int p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  prune(r);
  return r;
}

// f must be monic.
PVec pmod(PVec a, const PVec& f, int p) {
  prune(a);
  while (a.size() >= f.size()) {
    int t = a.back();
    size_t shift = a.size() - f.size();
    for (size_t j = 0; j < f.size(); ++j)
      a[shift + j] = mod_p(a[shift + j] - static_cast<long long>(t) * f[j], p);
    prune(a);
  }
  return a;
}

PVec pgcd(PVec a, PVec b, int p) {
  prune(a);
  prune(b);
  while (!b.empty()) {
    // Make b monic so pmod applies.
    int lead = b.back();
    if (lead != 1) {
      int inv = 1;
      for (int x = 1; x < p; ++x)
        if (x * lead % p == 1) inv = x;
      for (int& c : b) c = c * inv % p;
    }
    PVec r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PVec ppow_p(const PVec& a, int p, const PVec& f) {
  // a^p mod f by square and multiply over the exponent p.
  PVec result = {1};
  PVec base = a;
  int e = p;
  while (e > 0) {
    if (e & 1) result = pmod(pmul(result, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

struct TableEntry {
  int p, k;
  std::vector<long long> mod;
};

// Pinned default moduli: the least monic irreducible of each degree in the
// element enumeration order (coefficient vector read as a base-p integer,
// constant term least significant).  Checked against lex_min_irreducible by a
// unit test.
const TableEntry kDefaultModuli[] = {
    {2, 1, {0, 1}},          {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}},
    {3, 1, {0, 1}},          {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 1, 0, 0, 1}},
    {5, 1, {0, 1}},          {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},    {7, 1, {0, 1}},
    {7, 2, {1, 0, 1}},       {7, 3, {2, 0, 0, 1}},
};

const std::vector<long long>* default_modulus(int p, int k) {
  for (const auto& e : kDefaultModuli)
    if (e.p == p && e.k == k) return &e.mod;
  return nullptr;
}

using InternKey = std::tuple<int, int, std::vector<uint8_t>>;

std::map<InternKey, std::unique_ptr<FieldSpec>>& registry() {
  static auto* r = new std::map<InternKey, std::unique_ptr<FieldSpec>>();
  return *r;
}

std::mutex& registry_mutex() {
  static auto* m = new std::mutex();
  return *m;
}

}  // namespace

bool is_irreducible_over_prime_field(int p, const std::vector<long long>& coeffs) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  PVec f;
  f.reserve(coeffs.size());
  for (long long c : coeffs) f.push_back(mod_p(c, p));
  prune(f);
  if (f.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  int k = static_cast<int>(f.size()) - 1;
  if (f.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (k == 1) return true;
  if (f[0] == 0) return false;  // divisible by y
  // f is irreducible iff no irreducible of degree <= k/2 divides it; every
  // degree-i irreducible divides y^(p^i) - y.
  PVec xp = {0, 1};
  for (int i = 1; 2 * i <= k; ++i) {
    xp = ppow_p(xp, p, f);  // now y^(p^i) mod f
    PVec diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_p(diff[1] - 1, p);
    prune(diff);
    PVec g = pgcd(diff, f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

std::vector<long long> lex_min_irreducible(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k < 1 || k > FieldSpec::max_degree)
    throw std::invalid_argument("extension degree out of range");
  if (k == 1) return {0, 1};
  // Walk lower-coefficient vectors in enumeration order; the density of
  // irreducibles is about 1/k, so this terminates almost immediately.
  for (long long v = 0;; ++v) {
    std::vector<long long> cand(k + 1, 0);
    long long t = v;
    for (int i = 0; i < k; ++i) {
      cand[i] = t % p;
      t /= p;
    }
    if (t > 0) throw std::logic_error("no irreducible found in range");
    cand[k] = 1;
    if (is_irreducible_over_prime_field(p, cand)) return cand;
  }
}

FieldSpec::FieldSpec(int p, int k, std::vector<uint8_t> mod)
    : p_(p), k_(k), mod_(std::move(mod)) {
  order_ = 1;
  for (int i = 0; i < k_; ++i) order_ *= static_cast<uint128>(p_);
}

long long FieldSpec::q() const {
  if (order_ > static_cast<uint128>(9'000'000'000'000'000'000LL))
    throw std::overflow_error("field order does not fit a long long");
  return static_cast<long long>(order_);
}

const FieldSpec& FieldSpec::make(int p, int k) {
  const std::vector<long long>* mod = default_modulus(p, k);
  if (mod != nullptr) return make(p, k, *mod);
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  return make(p, k, lex_min_irreducible(p, k));
}

const FieldSpec& FieldSpec::make(int p, int k, const std::vector<long long>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p > 251) throw std::invalid_argument("characteristic too large");
  if (k < 1 || k > max_degree)
    throw std::invalid_argument("extension degree must be in [1, " +
                                std::to_string(max_degree) + "]");
  std::vector<uint8_t> mod;
  {
    std::vector<long long> m = modulus;
    while (!m.empty() && mod_p(m.back(), p) == 0) m.pop_back();
    if (static_cast<int>(m.size()) != k + 1)
      throw std::invalid_argument("modulus degree must equal k");
    for (long long c : m) mod.push_back(static_cast<uint8_t>(mod_p(c, p)));
    if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (k > 1 && !is_irreducible_over_prime_field(p, m))
      throw std::invalid_argument("modulus is reducible");
  }
  InternKey key{p, k, mod};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) slot.reset(new FieldSpec(p, k, std::move(mod)));
  return *slot;
}

const FieldSpec& FieldSpec::of_order(long long q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  int p = 0;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = static_cast<int>(q);  // q itself prime
  int k = 0;
  long long t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

FieldElement::FieldElement(const FieldSpec& f) : f_(&f) { c_.fill(0); }

FieldElement FieldElement::zero(const FieldSpec& f) { return FieldElement(f); }

FieldElement FieldElement::one(const FieldSpec& f) {
  FieldElement e(f);
  e.c_[0] = 1;
  return e;
}

FieldElement FieldElement::symbol_a(const FieldSpec& f) {
  if (f.k() < 2)
    throw std::invalid_argument("prime fields have no extension symbol");
  FieldElement e(f);
  e.c_[1] = 1;
  return e;
}

FieldElement FieldElement::from_index(const FieldSpec& f, long long index) {
  if (index < 0 || static_cast<uint128>(index) >= f.order())
    throw std::invalid_argument("element index out of range");
  FieldElement e(f);
  for (int i = 0; i < f.k() && index > 0; ++i) {
    e.c_[i] = static_cast<uint8_t>(index % f.p());
    index /= f.p();
  }
  return e;
}

FieldElement FieldElement::from_int(const FieldSpec& f, long long c) {
  FieldElement e(f);
  e.c_[0] = static_cast<uint8_t>(mod_p(c, f.p()));
  return e;
}

long long FieldElement::index() const {
  uint128 idx = 0;
  for (int i = f_->k() - 1; i >= 0; --i)
    idx = idx * static_cast<uint128>(f_->p()) + c_[i];
  if (idx > static_cast<uint128>(9'000'000'000'000'000'000LL))
    throw std::overflow_error("element index does not fit a long long");
  return static_cast<long long>(idx);
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < f_->k(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (f_ != o.f_)
    throw std::invalid_argument("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  FieldElement r(*f_);
  int p = f_->p();
  for (int i = 0; i < f_->k(); ++i) {
    int t = c_[i] + o.c_[i];
    r.c_[i] = static_cast<uint8_t>(t >= p ? t - p : t);
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  FieldElement r(*f_);
  int p = f_->p();
  for (int i = 0; i < f_->k(); ++i) {
    int t = c_[i] - o.c_[i];
    r.c_[i] = static_cast<uint8_t>(t < 0 ? t + p : t);
  }
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*f_);
  int p = f_->p();
  for (int i = 0; i < f_->k(); ++i)
    r.c_[i] = static_cast<uint8_t>(c_[i] == 0 ? 0 : p - c_[i]);
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  int p = f_->p();
  int k = f_->k();
  if (k == 1) {
    FieldElement r(*f_);
    r.c_[0] = static_cast<uint8_t>(c_[0] * o.c_[0] % p);
    return r;
  }
  int acc[2 * FieldSpec::max_degree - 1] = {0};
  for (int i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < k; ++j) acc[i + j] += c_[i] * o.c_[j];
  }
  const auto& mod = f_->modulus();
  for (int i = 2 * k - 2; i >= k; --i) {
    int t = acc[i] % p;
    if (t == 0) continue;
    for (int j = 0; j < k; ++j) {
      acc[i - k + j] -= t * mod[j];
    }
  }
  FieldElement r(*f_);
  for (int i = 0; i < k; ++i) r.c_[i] = static_cast<uint8_t>(mod_p(acc[i], p));
  return r;
}

FieldElement FieldElement::pow(uint128 e) const {
  FieldElement result = one(*f_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return pow(f_->order() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return *this * o.inv();
}

FieldElement FieldElement::conj_sqrt_q() const {
  if (!f_->square_order())
    throw std::invalid_argument("conj_sqrt_q needs a square field order");
  uint128 e = 1;
  for (int i = 0; i < f_->k() / 2; ++i) e *= static_cast<uint128>(f_->p());
  return pow(e);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (f_ != o.f_) return false;
  for (int i = 0; i < f_->k(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::optional<FieldElement> sqrt_of_minus_one(const FieldSpec& f) {
  if (f.order() > 1'000'000)
    throw std::invalid_argument("field too large for exhaustive root search");
  FieldElement minus_one = -FieldElement::one(f);
  for (long long i = 0; i < f.q(); ++i) {
    FieldElement e = FieldElement::from_index(f, i);
    if (e * e == minus_one) return e;
  }
  return std::nullopt;
}

}  // namespace qch
