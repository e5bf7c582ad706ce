#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace faceq {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix of arbitrary-precision integers.
struct IntegerMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

  BigInt& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix identity_matrix(int n);
IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y);

// u * input * v == d, with u and v unimodular and d diagonal with
// d(0,0) | d(1,1) | ... and nonnegative diagonal entries.
struct SnfResult {
  IntegerMatrix d, u, v;
};

// Deterministic Smith normal form: pivots are chosen by smallest nonzero
// absolute value, ties broken by row then column.
SnfResult smith_normal_form(IntegerMatrix m);

}  // namespace faceq
