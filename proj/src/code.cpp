#include <stdexcept>
#include "qch/code.hpp"

#include <bit>
#include <cstdint>

namespace qch {

namespace {

// Internal: row space without the nonempty-input validation (dual() of the
// full code legitimately produces a 0 x n basis).
Matrix canonical_basis(const Matrix& rows) {
  RrefResult r = rref(rows);
  Matrix basis(rows.field(), r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
  return basis;
}

}  // namespace

LinearCode LinearCode::from_rows(const Matrix& rows) {
  if (rows.rows() < 1) throw std::invalid_argument("empty generator matrix");
  return LinearCode(canonical_basis(rows));
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(canonical_basis(nullspace_rows(c.basis())));
}

int hull_dimension(const LinearCode& c) {
  if (c.k() == 0) return 0;
  return c.k() - rank(c.basis() * c.basis().transposed());
}

int hermitian_hull_dimension(const LinearCode& c) {
  if (!c.field().square_order())
    throw std::invalid_argument("Hermitian hull needs a square field order");
  if (c.k() == 0) return 0;
  return c.k() - rank(c.basis() * c.basis().conj_transposed());
}

int intersection_dimension(const LinearCode& c, const LinearCode& d) {
  if (c.field() != d.field() || c.n() != d.n())
    throw std::invalid_argument("codes live in different ambient spaces");
  if (c.k() == 0 || d.k() == 0) return 0;
  return c.k() + d.k() - rank(c.basis().vstack(d.basis()));
}

namespace {

// Messages are scanned one scalar class at a time: for each position j the
// message has u_j = 1, zeros below, and the suffix runs through all of
// GF(q)^(k-j-1) as a base-q odometer.  Stepping digit v -> v+1 adds
// (element(v+1) - element(v)) times the basis row (a constant 1 over prime
// fields, a table lookup otherwise), so a codeword update costs O(n) field
// additions, not a full encode.  Three routes share that skeleton: bit-packed
// GF(2), byte-indexed entries with addition/scaling tables (q <= 255), and
// plain field elements beyond.

DistanceScan packed_binary_scan(const LinearCode& c, int floor, unsigned long long budget) {
  int k = c.k(), n = c.n();
  std::vector<uint64_t> rows(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if (!c.basis().at(i, j).is_zero()) rows[i] |= uint64_t{1} << j;
  DistanceScan scan;
  int best = n;
  std::vector<uint8_t> digit(k, 0);
  for (int j0 = 0; j0 < k; ++j0) {
    uint64_t cw = rows[j0];
    std::fill(digit.begin() + j0, digit.end(), 0);
    while (true) {
      if (scan.examined == budget) {
        scan.upper_bound = best;
        scan.budget_hit = true;
        return scan;
      }
      ++scan.examined;
      int w = std::popcount(cw);
      if (w < best) best = w;
      if (best <= floor) {
        scan.upper_bound = best;
        scan.pruned = true;
        return scan;
      }
      if (best == 1) {
        scan.exact = scan.upper_bound = 1;
        return scan;
      }
      int pos = j0 + 1;
      while (pos < k) {
        cw ^= rows[pos];
        if (++digit[pos] < 2) break;
        digit[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  scan.exact = scan.upper_bound = best;
  return scan;
}

DistanceScan byte_indexed_scan(const LinearCode& c, int floor, unsigned long long budget) {
  const FieldSpec& f = c.field();
  int k = c.k(), n = c.n();
  long long q = f.q();
  std::vector<uint8_t> add(static_cast<size_t>(q) * q), mul(static_cast<size_t>(q) * q);
  for (long long a = 0; a < q; ++a) {
    FieldElement ea = FieldElement::from_index(f, a);
    for (long long b = 0; b < q; ++b) {
      FieldElement eb = FieldElement::from_index(f, b);
      add[a * q + b] = static_cast<uint8_t>((ea + eb).index());
      mul[a * q + b] = static_cast<uint8_t>((ea * eb).index());
    }
  }
  std::vector<uint8_t> delta(q);
  for (long long v = 0; v < q; ++v)
    delta[v] = static_cast<uint8_t>((FieldElement::from_index(f, (v + 1) % q) -
                                     FieldElement::from_index(f, v))
                                        .index());
  std::vector<std::vector<uint8_t>> rows(k, std::vector<uint8_t>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = static_cast<uint8_t>(c.basis().at(i, j).index());

  DistanceScan scan;
  int best = n;
  std::vector<uint8_t> cw(n), digit(k);
  for (int j0 = 0; j0 < k; ++j0) {
    cw = rows[j0];
    std::fill(digit.begin() + j0, digit.end(), 0);
    while (true) {
      if (scan.examined == budget) {
        scan.upper_bound = best;
        scan.budget_hit = true;
        return scan;
      }
      ++scan.examined;
      int w = 0;
      for (int j = 0; j < n; ++j) {
        w += cw[j] != 0;
        if (w >= best) break;
      }
      if (w < best) best = w;
      if (best <= floor) {
        scan.upper_bound = best;
        scan.pruned = true;
        return scan;
      }
      if (best == 1) {
        scan.exact = scan.upper_bound = 1;
        return scan;
      }
      int pos = j0 + 1;
      while (pos < k) {
        const uint8_t* r = rows[pos].data();
        const uint8_t* scale = mul.data() + static_cast<size_t>(delta[digit[pos]]) * q;
        for (int j = 0; j < n; ++j) cw[j] = add[static_cast<size_t>(cw[j]) * q + scale[r[j]]];
        if (++digit[pos] < q) break;
        digit[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  scan.exact = scan.upper_bound = best;
  return scan;
}

DistanceScan element_scan(const LinearCode& c, int floor, unsigned long long budget) {
  const FieldSpec& f = c.field();
  int k = c.k(), n = c.n();
  long long q = f.q();
  std::vector<std::vector<FieldElement>> rows;
  for (int i = 0; i < k; ++i) {
    std::vector<FieldElement> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) row.push_back(c.basis().at(i, j));
    rows.push_back(std::move(row));
  }
  std::vector<FieldElement> delta;
  for (long long v = 0; v < q; ++v)
    delta.push_back(FieldElement::from_index(f, (v + 1) % q) - FieldElement::from_index(f, v));
  DistanceScan scan;
  int best = n;
  std::vector<long long> digit(k, 0);
  for (int j0 = 0; j0 < k; ++j0) {
    std::vector<FieldElement> cw = rows[j0];
    std::fill(digit.begin() + j0, digit.end(), 0);
    while (true) {
      if (scan.examined == budget) {
        scan.upper_bound = best;
        scan.budget_hit = true;
        return scan;
      }
      ++scan.examined;
      int w = 0;
      for (int j = 0; j < n; ++j) {
        w += !cw[j].is_zero();
        if (w >= best) break;
      }
      if (w < best) best = w;
      if (best <= floor) {
        scan.upper_bound = best;
        scan.pruned = true;
        return scan;
      }
      if (best == 1) {
        scan.exact = scan.upper_bound = 1;
        return scan;
      }
      int pos = j0 + 1;
      while (pos < k) {
        const FieldElement& ds = delta[static_cast<size_t>(digit[pos])];
        for (int j = 0; j < n; ++j) cw[j] = cw[j] + ds * rows[pos][j];
        if (++digit[pos] < q) break;
        digit[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  scan.exact = scan.upper_bound = best;
  return scan;
}

}  // namespace

DistanceScan distance_scan(const LinearCode& c, int floor, unsigned long long budget) {
  if (c.k() < 1)
    throw std::invalid_argument("minimum distance is undefined for the zero code");
  long long q = c.field().q();
  if (q == 2 && c.n() <= 64) return packed_binary_scan(c, floor, budget);
  if (q <= 255) return byte_indexed_scan(c, floor, budget);
  return element_scan(c, floor, budget);
}

int min_distance(const LinearCode& c, unsigned long long budget) {
  DistanceScan scan = distance_scan(c, 0, budget);
  if (scan.budget_hit)
    throw BudgetExceeded("weight enumeration budget exceeded", scan.upper_bound,
                         scan.examined);
  return *scan.exact;
}

int security_parameter(const LinearCode& c, const LinearCode& d, unsigned long long budget) {
  if (c.field() != d.field() || c.n() != d.n())
    throw std::invalid_argument("codes live in different ambient spaces");
  return std::min(min_distance(c, budget), min_distance(dual(d), budget));
}

}  // namespace qch
