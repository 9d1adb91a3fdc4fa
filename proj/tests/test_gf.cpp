#include <stdexcept>
#include <doctest.h>

#include "qch/gf.hpp"

using namespace qch;

TEST_SUITE_BEGIN("gf");

TEST_CASE("interning returns one object per (p, k, modulus)") {
  const FieldSpec& a = FieldSpec::make(2, 2);
  const FieldSpec& b = FieldSpec::make(2, 2);
  const FieldSpec& c = FieldSpec::of_order(4);
  CHECK(&a == &b);
  CHECK(&a == &c);
  CHECK(&FieldSpec::make(3, 1) != &a);
  const FieldSpec& other = FieldSpec::make(2, 2, {1, 1, 1});
  CHECK(&other == &a);  // same modulus spelled explicitly
}

TEST_CASE("default moduli are the enumeration-least irreducibles") {
  struct Row {
    int p, k;
    std::vector<long long> mod;
  };
  // x^2+x+1, x^3+x+1, x^4+x+1, x^2+1, x^3+2x+1, x^2+2, x^2+1
  const std::vector<Row> rows = {
      {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}}, {2, 4, {1, 1, 0, 0, 1}},
      {3, 2, {1, 0, 1}},    {3, 3, {1, 2, 0, 1}}, {5, 2, {2, 0, 1}},
      {7, 2, {1, 0, 1}},
  };
  for (const auto& r : rows) {
    CHECK(lex_min_irreducible(r.p, r.k) == r.mod);
    const FieldSpec& f = FieldSpec::make(r.p, r.k);
    std::vector<uint8_t> want(r.mod.begin(), r.mod.end());
    CHECK(f.modulus() == want);
  }
}

TEST_CASE("irreducibility over the prime field") {
  CHECK(is_irreducible_over_prime_field(2, {1, 1, 1}));
  CHECK_FALSE(is_irreducible_over_prime_field(2, {1, 0, 1}));  // (x+1)^2
  CHECK(is_irreducible_over_prime_field(3, {1, 0, 1}));
  CHECK_FALSE(is_irreducible_over_prime_field(3, {2, 0, 1}));  // (x+1)(x+2)
  CHECK(is_irreducible_over_prime_field(2, {1, 1, 0, 0, 1}));
  CHECK_FALSE(is_irreducible_over_prime_field(2, {1, 0, 0, 0, 1}));  // (x+1)^4
  // Root-free but reducible: (x^2+x+1)(x^3+x+1) = x^5+x^4+1.
  CHECK_FALSE(is_irreducible_over_prime_field(2, {1, 0, 0, 0, 1, 1}));
}

TEST_CASE("field axioms hold on every element (exhaustive, small orders)") {
  for (long long q : {2, 3, 4, 5, 8, 9, 25, 27}) {
    const FieldSpec& f = FieldSpec::of_order(q);
    REQUIRE(f.q() == q);
    std::vector<FieldElement> all;
    for (long long i = 0; i < q; ++i) all.push_back(FieldElement::from_index(f, i));
    for (long long i = 0; i < q; ++i) CHECK(all[i].index() == i);

    FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
    for (const auto& x : all) {
      CHECK(x + zero == x);
      CHECK(x * one == x);
      CHECK(x - x == zero);
      if (!x.is_zero()) {
        CHECK(x * x.inv() == one);
        CHECK(x.pow(static_cast<uint128>(q - 1)) == one);
      }
    }
    // Commutativity / associativity / distributivity over all triples.
    for (const auto& x : all)
      for (const auto& y : all) {
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        for (const auto& z : all) {
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
  }
}

TEST_CASE("frobenius is additive") {
  for (long long q : {4, 8, 9, 25}) {
    const FieldSpec& f = FieldSpec::of_order(q);
    auto frob = [&](const FieldElement& x) { return x.pow(static_cast<uint128>(f.p())); };
    for (long long i = 0; i < q; ++i)
      for (long long j = 0; j < q; ++j) {
        FieldElement x = FieldElement::from_index(f, i), y = FieldElement::from_index(f, j);
        CHECK(frob(x + y) == frob(x) + frob(y));
        CHECK(frob(x * y) == frob(x) * frob(y));
      }
  }
}

TEST_CASE("conj_sqrt_q is the order-2 automorphism of square-order fields") {
  for (long long q : {4, 9, 16, 25, 49}) {
    const FieldSpec& f = FieldSpec::of_order(q);
    long long r = 1;  // sqrt(q) = p^(k/2)
    for (int e = 0; e < f.k() / 2; ++e) r *= f.p();
    for (long long i = 0; i < q; ++i) {
      FieldElement x = FieldElement::from_index(f, i);
      FieldElement c = x.conj_sqrt_q();
      CHECK(c == x.pow(static_cast<uint128>(r)));
      CHECK(c.conj_sqrt_q() == x);
    }
  }
  const FieldSpec& f8 = FieldSpec::of_order(8);
  CHECK_THROWS_AS(FieldElement::one(f8).conj_sqrt_q(), std::invalid_argument);
}

TEST_CASE("sqrt_of_minus_one exists exactly when q is even or q = 1 (mod 4)") {
  struct Row {
    long long q;
    bool exists;
  };
  for (const auto& r : std::vector<Row>{{2, true},
                                        {3, false},
                                        {4, true},
                                        {5, true},
                                        {7, false},
                                        {8, true},
                                        {9, true},
                                        {13, true},
                                        {25, true},
                                        {27, false}}) {
    const FieldSpec& f = FieldSpec::of_order(r.q);
    auto s = sqrt_of_minus_one(f);
    CHECK(s.has_value() == r.exists);
    if (s) CHECK(*s * *s == -FieldElement::one(f));
  }
  // The least one is pinned: 2^2 = 4 = -1 in GF(5).
  CHECK(sqrt_of_minus_one(FieldSpec::of_order(5))->index() == 2);
}

TEST_CASE("from_int folds through the characteristic") {
  const FieldSpec& f = FieldSpec::of_order(5);
  CHECK(FieldElement::from_int(f, 7) == FieldElement::from_int(f, 2));
  CHECK(FieldElement::from_int(f, -1) == FieldElement::from_int(f, 4));
  CHECK(FieldElement::from_int(f, 10).is_zero());
}

TEST_CASE("mixed-field arithmetic is rejected") {
  const FieldSpec& f2 = FieldSpec::of_order(2);
  const FieldSpec& f3 = FieldSpec::of_order(3);
  CHECK_THROWS_AS(FieldElement::one(f2) + FieldElement::one(f3), std::invalid_argument);
}

TEST_CASE("make validates its arguments") {
  CHECK_THROWS_AS(FieldSpec::make(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(FieldSpec::make(2, 0), std::invalid_argument);   // degree
  CHECK_THROWS_AS(FieldSpec::make(2, FieldSpec::max_degree + 1),
                  std::invalid_argument);  // too big
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), std::invalid_argument);  // reducible
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 1, 0}), std::invalid_argument);  // degree 1
  CHECK_THROWS_AS(FieldSpec::of_order(6), std::invalid_argument);  // not a prime power
  CHECK_THROWS_AS(FieldSpec::of_order(1), std::invalid_argument);
}

TEST_SUITE_END();
