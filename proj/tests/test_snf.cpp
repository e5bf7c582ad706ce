#include <doctest.h>

#include <utility>
#include <vector>

#include "faceq/gallery.hpp"
#include "faceq/snf.hpp"

using namespace faceq;

namespace {

IntegerMatrix make(int rows, int cols, std::vector<long long> entries) {
  IntegerMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = entries[std::size_t(r) * cols + c];
  return m;
}

std::vector<BigInt> diagonal(const IntegerMatrix& d) {
  std::vector<BigInt> out;
  for (int i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
  return out;
}

// Fraction-free (Bareiss) determinant; every division below is exact, so the
// arithmetic stays in the integers end to end.
BigInt determinant(IntegerMatrix m) {
  REQUIRE(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  BigInt prev = 1;
  BigInt sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

void check_postconditions(const IntegerMatrix& input) {
  SnfResult r = smith_normal_form(input);
  CHECK(r.d.rows == input.rows);
  CHECK(r.d.cols == input.cols);
  CHECK(r.u.rows == input.rows);
  CHECK(r.u.cols == input.rows);
  CHECK(r.v.rows == input.cols);
  CHECK(r.v.cols == input.cols);

  CHECK(multiply(multiply(r.u, input), r.v) == r.d);

  for (int i = 0; i < r.d.rows; ++i)
    for (int j = 0; j < r.d.cols; ++j)
      if (i != j) CHECK(r.d.at(i, j) == 0);

  std::vector<BigInt> diag = diagonal(r.d);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0)
        CHECK(diag[i + 1] == 0);
      else
        CHECK(diag[i + 1] % diag[i] == 0);
    }
  }

  BigInt du = determinant(r.u);
  BigInt dv = determinant(r.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));

  if (input.rows == input.cols) {
    BigInt prod = 1;
    for (const BigInt& x : diag) prod *= x;
    CHECK(abs(determinant(input)) == prod);
  }
}

}  // namespace

TEST_CASE("diagonal form of small frozen matrices") {
  CHECK(diagonal(smith_normal_form(make(1, 1, {5})).d) ==
        std::vector<BigInt>{5});
  CHECK(diagonal(smith_normal_form(make(1, 1, {-7})).d) ==
        std::vector<BigInt>{7});
  CHECK(diagonal(smith_normal_form(make(2, 2, {2, 0, 0, 2})).d) ==
        std::vector<BigInt>{2, 2});
  // gcd pulls to the front: diag(2, 3) ~ diag(1, 6).
  CHECK(diagonal(smith_normal_form(make(2, 2, {2, 0, 0, 3})).d) ==
        std::vector<BigInt>{1, 6});
  CHECK(diagonal(smith_normal_form(make(2, 2, {1, 2, 3, 4})).d) ==
        std::vector<BigInt>{1, 2});
  // Relator matrix of the quaternion group presentation x^2 = y^2, xyx = y.
  CHECK(diagonal(smith_normal_form(make(2, 2, {2, -2, 2, 0})).d) ==
        std::vector<BigInt>{2, 2});
  CHECK(diagonal(smith_normal_form(make(1, 3, {4, 6, 10})).d) ==
        std::vector<BigInt>{2});
  SnfResult row = smith_normal_form(make(1, 3, {4, 6, 10}));
  CHECK(row.d.at(0, 1) == 0);
  CHECK(row.d.at(0, 2) == 0);
}

TEST_CASE("degenerate shapes") {
  check_postconditions(make(2, 2, {0, 0, 0, 0}));
  check_postconditions(IntegerMatrix(0, 0));
  check_postconditions(IntegerMatrix(3, 0));
  check_postconditions(IntegerMatrix(0, 3));
  CHECK(diagonal(smith_normal_form(make(2, 2, {0, 0, 0, 0})).d) ==
        std::vector<BigInt>{0, 0});
}

TEST_CASE("postconditions hold on 500 random matrices") {
  SplitMix64 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    CAPTURE(trial);
    int rows = 1 + int(rng.below(8));
    int cols = 1 + int(rng.below(8));
    IntegerMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m.at(r, c) = int(rng.below(19)) - 9;
    check_postconditions(m);
  }
}

TEST_CASE("matrix helpers behave") {
  IntegerMatrix id = identity_matrix(3);
  IntegerMatrix m = make(3, 2, {1, 2, 3, 4, 5, 6});
  CHECK(multiply(id, m) == m);
  CHECK(multiply(m, identity_matrix(2)) == m);
  IntegerMatrix p = multiply(make(2, 2, {1, 1, 0, 1}), make(2, 2, {2, 0, 5, 3}));
  CHECK(p == make(2, 2, {7, 3, 5, 3}));
}
