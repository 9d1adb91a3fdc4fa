#include <stdexcept>
#include <doctest.h>

#include <random>

#include "qch/fc.hpp"
#include "qch/serde.hpp"

using namespace qch;

namespace {

RingElement ring(const std::string& s, const FieldSpec& f, int m) {
  return ring_element_from_string(s, f, m);
}

RingElement random_ring(const FieldSpec& f, int m, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (int i = 0; i < m; ++i)
    c.push_back(FieldElement::from_index(f, static_cast<long long>(rng() % f.q())));
  return RingElement(Poly(f, std::move(c)), m);
}

}  // namespace

TEST_SUITE_BEGIN("fc");

TEST_CASE("generator block layout") {
  const FieldSpec& f = FieldSpec::of_order(3);
  FcSpec spec(ring("x", f, 2), ring("1+2x", f, 2));
  Matrix g = generator_rows(spec);
  REQUIRE(g.rows() == 4);
  REQUIRE(g.cols() == 8);
  auto row = [&](int r) {
    std::vector<long long> v;
    for (int c = 0; c < 8; ++c) v.push_back(g.at(r, c).index());
    return v;
  };
  // [ I | 0 | circ(a1) | circ(a2) ], [ 0 | I | -circ(a2)^T | circ(a1)^T ];
  // over m = 2 conj is the identity, so circ(a1)^T = circ(a1) here.
  CHECK(row(0) == std::vector<long long>{1, 0, 0, 0, 0, 1, 1, 2});
  CHECK(row(1) == std::vector<long long>{0, 1, 0, 0, 1, 0, 2, 1});
  CHECK(row(2) == std::vector<long long>{0, 0, 1, 0, 2, 1, 0, 1});
  CHECK(row(3) == std::vector<long long>{0, 0, 0, 1, 1, 2, 1, 0});

  CHECK_THROWS_AS(FcSpec(ring("x", f, 2), ring("x", f, 4)), std::invalid_argument);
}

TEST_CASE("four-circulant codes always have dimension 2m and even hull") {
  std::mt19937_64 rng(53);
  for (long long order : {2, 3, 4, 5}) {
    const FieldSpec& f = FieldSpec::of_order(order);
    for (int trial = 0; trial < 60; ++trial) {
      int m = 1 + static_cast<int>(rng() % 8);
      if (m % f.p() == 0) continue;
      FcSpec spec(random_ring(f, m, rng), random_ring(f, m, rng));
      LinearCode code = build_code(spec);
      CHECK(code.n() == 4 * m);
      CHECK(code.k() == 2 * m);
      int h = hull_dimension(spec);
      CHECK(h % 2 == 0);
      CHECK(h == hull_dimension(code));
      CHECK(is_lcd(spec) == (h == 0));
    }
  }
}

TEST_CASE("a four-circulant code with a nonzero hull") {
  // a1 = x, a2 = x+1 over GF(2), m = 3: the hull polynomial is
  // 1 + x.x^2 + (x+1)(x^2+1) = x^2+x, sharing x+1 with x^3-1, so the hull has
  // dimension 2.
  const FieldSpec& f = FieldSpec::of_order(2);
  FcSpec spec(ring("x", f, 3), ring("x+1", f, 3));
  CHECK(hull_dimension(spec) == 2);
  CHECK(hull_dimension(build_code(spec)) == 2);
  CHECK_FALSE(is_lcd(spec));
}

TEST_CASE("published binary LCD rows reproduce") {
  const FieldSpec& f = FieldSpec::of_order(2);
  struct Row {
    int m, d;
    const char *a1, *a2;
  };
  for (const Row& r : {Row{3, 2, "x+1", "x^2+x"}, Row{5, 5, "x^2", "x^2+x+1"}}) {
    CAPTURE(r.m);
    FcSpec spec(ring(r.a1, f, r.m), ring(r.a2, f, r.m));
    CHECK(is_lcd(spec));
    LinearCode code = build_code(spec);
    CHECK(hull_dimension(code) == 0);
    CHECK(min_distance(code) == r.d);
  }
}

TEST_CASE("published ternary LCD row reproduces") {
  const FieldSpec& f = FieldSpec::of_order(3);
  FcSpec spec(ring("2x^3+x^2+1", f, 4), ring("2x^3+1", f, 4));
  CHECK(is_lcd(spec));
  LinearCode code = build_code(spec);
  CHECK(code.n() == 16);
  CHECK(code.k() == 8);
  CHECK(hull_dimension(code) == 0);
  CHECK(min_distance(code) == 6);
}

TEST_CASE("complementary pairs of four-circulant codes") {
  const FieldSpec& f = FieldSpec::of_order(3);

  SUBCASE("difference test agrees with the subspace computation") {
    std::mt19937_64 rng(59);
    int lcp_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
      int m = 2 + static_cast<int>(rng() % 4);
      if (m % 3 == 0) continue;
      FcSpec c(random_ring(f, m, rng), random_ring(f, m, rng));
      FcSpec d(random_ring(f, m, rng), random_ring(f, m, rng));
      bool formula = is_lcp(c, d);
      LinearCode cc = build_code(c), dc = build_code(d);
      bool oracle =
          intersection_dimension(cc, dc) == 0 && cc.k() + dc.k() == cc.n();
      CHECK(formula == oracle);
      lcp_seen += formula;
    }
    CHECK(lcp_seen > 0);
  }

  SUBCASE("shifting one generator by a unit yields a complementary partner") {
    // From the published pair list: partner b1 = a1 + 1, b2 = a2 makes the
    // difference polynomial the constant 1.
    FcSpec c(ring("2x^3+2x^2+x", f, 4), ring("x^2+1", f, 4));
    FcSpec d(ring("2x^3+2x^2+x+1", f, 4), ring("x^2+1", f, 4));
    CHECK(is_lcp(c, d));
    LinearCode cc = build_code(c), dc = build_code(d);
    CHECK(intersection_dimension(cc, dc) == 0);
    CHECK(security_parameter(cc, dc) >= 1);
  }

  SUBCASE("difference divisible by x-1 is rejected") {
    FcSpec c(ring("x^2+2x+1", f, 5), ring("2x^3+x+1", f, 5));
    // b1 - a1 = x+2 = x-1, b2 = a2: every evaluation at 1 collapses.
    FcSpec d(ring("x^2+3x", f, 5), ring("2x^3+x+1", f, 5));
    CHECK_FALSE(is_lcp(c, d));
    LinearCode cc = build_code(c), dc = build_code(d);
    CHECK(intersection_dimension(cc, dc) > 0);
  }

  SUBCASE("mismatched shapes are rejected") {
    FcSpec a(ring("x", f, 4), ring("1", f, 4));
    FcSpec b(ring("x", f, 5), ring("1", f, 5));
    CHECK_THROWS_AS(is_lcp(a, b), std::invalid_argument);
    const FieldSpec& f2 = FieldSpec::of_order(2);
    FcSpec c(ring("x", f2, 5), ring("1", f2, 5));
    CHECK_THROWS_AS(is_lcp(b, c), std::invalid_argument);
  }
}

TEST_SUITE_END();
