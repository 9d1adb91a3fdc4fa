#include <stdexcept>
#include <doctest.h>

#include <random>

#include "qch/code.hpp"

using namespace qch;

namespace {

Matrix from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = FieldElement::from_int(f, rows[r][c]);
  return m;
}

LinearCode random_code(const FieldSpec& f, int k, int n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(f, k, n);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c)
        m.at(r, c) = FieldElement::from_index(f, static_cast<long long>(rng() % f.q()));
    LinearCode code = LinearCode::from_rows(m);
    if (code.k() == k) return code;
  }
}

// Full q^k message sweep; independent of the scalar-class enumeration inside
// distance_scan.
int naive_min_distance(const LinearCode& c) {
  const FieldSpec& f = c.field();
  long long q = f.q();
  int k = c.k(), n = c.n();
  REQUIRE(k >= 1);
  std::vector<long long> msg(k, 0);
  int best = n + 1;
  while (true) {
    int pos = 0;
    while (pos < k && ++msg[pos] == q) msg[pos++] = 0;
    if (pos == k) break;
    int w = 0;
    for (int col = 0; col < n; ++col) {
      FieldElement s = FieldElement::zero(f);
      for (int row = 0; row < k; ++row)
        s = s + c.basis().at(row, col) * FieldElement::from_index(f, msg[row]);
      if (!s.is_zero()) ++w;
    }
    best = std::min(best, w);
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("code");

TEST_CASE("from_rows canonicalizes to RREF and drops dependent rows") {
  const FieldSpec& f = FieldSpec::of_order(2);
  LinearCode c = LinearCode::from_rows(from_ints(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(c.n() == 3);
  CHECK(c.k() == 2);
  LinearCode same = LinearCode::from_rows(from_ints(f, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(c == same);

  LinearCode zero = LinearCode::from_rows(from_ints(f, {{0, 0, 0}}));
  CHECK(zero.k() == 0);
  CHECK(hull_dimension(zero) == 0);
}

TEST_CASE("dual dimensions and orthogonality") {
  const FieldSpec& f = FieldSpec::of_order(3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    int k = static_cast<int>(rng() % (n + 1));
    LinearCode c = k == 0 ? dual(LinearCode::from_rows(Matrix::identity(f, n)))
                          : random_code(f, k, n, rng);
    LinearCode d = dual(c);
    CHECK(d.k() == n - c.k());
    if (c.k() > 0 && d.k() > 0) {
      Matrix prod = c.basis() * d.basis().transposed();
      for (int r = 0; r < prod.rows(); ++r)
        for (int col = 0; col < prod.cols(); ++col) CHECK(prod.at(r, col).is_zero());
    }
    CHECK(dual(d) == c);
  }
}

TEST_CASE("hull dimension from ranks") {
  const FieldSpec& f2 = FieldSpec::of_order(2);
  // span{(1,0)}: G G^T = [1], hull 0.
  CHECK(hull_dimension(LinearCode::from_rows(from_ints(f2, {{1, 0}}))) == 0);
  // span{(1,1)}: self-orthogonal over GF(2), hull 1.
  CHECK(hull_dimension(LinearCode::from_rows(from_ints(f2, {{1, 1}}))) == 1);

  // Hull equals dim(C intersect dual(C)) computed independently.
  std::mt19937_64 rng(23);
  for (long long order : {2, 3, 4, 5}) {
    const FieldSpec& f = FieldSpec::of_order(order);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 2 + static_cast<int>(rng() % 6);
      int k = 1 + static_cast<int>(rng() % n);
      LinearCode c = random_code(f, k, n, rng);
      CHECK(hull_dimension(c) == intersection_dimension(c, dual(c)));
      CHECK(intersection_dimension(c, c) == c.k());
    }
  }
}

TEST_CASE("hermitian hull") {
  const FieldSpec& f4 = FieldSpec::make(2, 2);
  FieldElement al = FieldElement::symbol_a(f4);
  Matrix g(f4, 1, 2);
  g.at(0, 0) = FieldElement::one(f4);
  g.at(0, 1) = al;
  // (1, a) . (1, a)^conj = 1 + a * a^2 = 1 + 1 = 0: Hermitian self-orthogonal.
  CHECK(hermitian_hull_dimension(LinearCode::from_rows(g)) == 1);
  g.at(0, 0) = FieldElement::zero(f4);
  g.at(0, 1) = FieldElement::one(f4);
  CHECK(hermitian_hull_dimension(LinearCode::from_rows(g)) == 0);
  CHECK_THROWS_AS(
      hermitian_hull_dimension(LinearCode::from_rows(Matrix::identity(FieldSpec::of_order(2), 2))),
      std::invalid_argument);
}

TEST_CASE("min_distance on pinned codes") {
  const FieldSpec& f2 = FieldSpec::of_order(2);
  // [7,4,3] Hamming code.
  LinearCode hamming = LinearCode::from_rows(from_ints(f2, {{1, 0, 0, 0, 0, 1, 1},
                                                            {0, 1, 0, 0, 1, 0, 1},
                                                            {0, 0, 1, 0, 1, 1, 0},
                                                            {0, 0, 0, 1, 1, 1, 1}}));
  CHECK(min_distance(hamming) == 3);
  // [5,1,5] repetition code.
  CHECK(min_distance(LinearCode::from_rows(from_ints(f2, {{1, 1, 1, 1, 1}}))) == 5);
  // Whole space.
  CHECK(min_distance(LinearCode::from_rows(Matrix::identity(f2, 3))) == 1);

  const FieldSpec& f3 = FieldSpec::of_order(3);
  // [4,2,3] tetracode.
  LinearCode tetra = LinearCode::from_rows(from_ints(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  CHECK(min_distance(tetra) == 3);
}

TEST_CASE("min_distance agrees with the all-messages sweep") {
  std::mt19937_64 rng(29);
  for (long long order : {2, 3, 4, 5}) {
    const FieldSpec& f = FieldSpec::of_order(order);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 3 + static_cast<int>(rng() % 8);
      int k = 1 + static_cast<int>(rng() % std::min(n, 5));
      LinearCode c = random_code(f, k, n, rng);
      CHECK(min_distance(c) == naive_min_distance(c));
    }
  }
}

TEST_CASE("distance_scan floor pruning and budget accounting") {
  const FieldSpec& f2 = FieldSpec::of_order(2);
  LinearCode rep = LinearCode::from_rows(from_ints(f2, {{1, 1, 1, 1, 1}}));
  DistanceScan full = distance_scan(rep, 0, kDefaultDistanceBudget);
  CHECK(full.exact == 5);
  CHECK(full.examined == 1);
  CHECK_FALSE(full.pruned);

  // floor >= true distance: scan stops as soon as a witness at or below the
  // floor appears, reporting only the bound.
  DistanceScan pruned = distance_scan(rep, 5, kDefaultDistanceBudget);
  CHECK(pruned.pruned);
  CHECK_FALSE(pruned.exact.has_value());
  CHECK(pruned.upper_bound <= 5);

  // floor = d - 1 must still deliver the exact value.
  const FieldSpec& f3 = FieldSpec::of_order(3);
  LinearCode tetra = LinearCode::from_rows(from_ints(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  DistanceScan tight = distance_scan(tetra, 2, kDefaultDistanceBudget);
  CHECK(tight.exact == 3);

  DistanceScan starved = distance_scan(tetra, 0, 2);
  CHECK(starved.budget_hit);
  CHECK(starved.examined == 2);
  CHECK_FALSE(starved.exact.has_value());
  CHECK(starved.upper_bound >= 3);  // bounds never undershoot the truth

  CHECK_THROWS_AS(min_distance(tetra, 2), BudgetExceeded);
  try {
    min_distance(tetra, 2);
  } catch (const BudgetExceeded& e) {
    CHECK(e.examined == 2);
    CHECK(e.partial_upper_bound >= 3);
  }

  LinearCode zero = dual(LinearCode::from_rows(Matrix::identity(f2, 2)));
  CHECK_THROWS_AS(min_distance(zero), std::invalid_argument);
}

TEST_CASE("all three scan paths agree with the naive sweep") {
  std::mt19937_64 rng(31);
  // Packed path: GF(2), n <= 64.
  const FieldSpec& f2 = FieldSpec::of_order(2);
  for (int trial = 0; trial < 20; ++trial) {
    LinearCode c = random_code(f2, 4, 10, rng);
    CHECK(min_distance(c) == naive_min_distance(c));
  }
  // Byte-indexed path: 2 < q <= 255.
  const FieldSpec& f25 = FieldSpec::of_order(25);
  for (int trial = 0; trial < 5; ++trial) {
    LinearCode c = random_code(f25, 2, 6, rng);
    CHECK(min_distance(c) == naive_min_distance(c));
  }
  // Generic element path: q > 255.
  const FieldSpec& f343 = FieldSpec::of_order(343);
  for (int trial = 0; trial < 3; ++trial) {
    LinearCode c = random_code(f343, 1, 5, rng);
    CHECK(min_distance(c) == naive_min_distance(c));
  }
}

TEST_CASE("security parameter is the min of the two relevant distances") {
  const FieldSpec& f3 = FieldSpec::of_order(3);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    LinearCode c = random_code(f3, 2, 6, rng);
    LinearCode d = random_code(f3, 3, 6, rng);
    CHECK(security_parameter(c, d) ==
          std::min(min_distance(c), min_distance(dual(d))));
  }
}

TEST_SUITE_END();
