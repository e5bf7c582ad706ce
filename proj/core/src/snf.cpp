#include "faceq/snf.hpp"

#include <utility>

#include "faceq/complex.hpp"  // InvariantError

namespace faceq {

IntegerMatrix identity_matrix(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.cols != y.rows)
    throw InvariantError("matrix product dimension mismatch");
  IntegerMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const BigInt& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += xv * y.at(k, j);
    }
  return out;
}

namespace {

struct Worker {
  IntegerMatrix a, u, v;

  void row_swap(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(r1, c), a.at(r2, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(r1, c), u.at(r2, c));
  }

  void col_swap(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, c1), v.at(r, c2));
  }

  // row r -= q * row t
  void row_sub(int r, int t, const BigInt& q) {
    for (int c = 0; c < a.cols; ++c) a.at(r, c) -= q * a.at(t, c);
    for (int c = 0; c < u.cols; ++c) u.at(r, c) -= q * u.at(t, c);
  }

  // col c -= q * col t
  void col_sub(int c, int t, const BigInt& q) {
    for (int r = 0; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, t);
    for (int r = 0; r < v.rows; ++r) v.at(r, c) -= q * v.at(r, t);
  }

  // row dest += row src
  void row_add(int dest, int src) {
    for (int c = 0; c < a.cols; ++c) a.at(dest, c) += a.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dest, c) += u.at(src, c);
  }

  void row_negate(int r) {
    for (int c = 0; c < a.cols; ++c) a.at(r, c) = -a.at(r, c);
    for (int c = 0; c < u.cols; ++c) u.at(r, c) = -u.at(r, c);
  }

  // Establishes one diagonal entry: afterwards (t, t) holds a pivot that
  // divides every entry of the submatrix beyond it, and row t / column t are
  // zero elsewhere.  Returns false when the submatrix at (t, t) is entirely
  // zero.  Terminates because every retry strictly shrinks the smallest
  // absolute value present in the submatrix.
  bool reduce_at(int t) {
    while (true) {
      int br = -1, bc = -1;
      for (int r = t; r < a.rows; ++r)
        for (int c = t; c < a.cols; ++c) {
          const BigInt& val = a.at(r, c);
          if (val == 0) continue;
          if (br < 0 || abs(val) < abs(a.at(br, bc))) {
            br = r;
            bc = c;
          }
        }
      if (br < 0) return false;
      row_swap(t, br);
      col_swap(t, bc);
      bool clean = true;
      for (int r = t + 1; r < a.rows; ++r) {
        if (a.at(r, t) == 0) continue;
        BigInt q = a.at(r, t) / a.at(t, t);
        row_sub(r, t, q);
        if (a.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < a.cols; ++c) {
        if (a.at(t, c) == 0) continue;
        BigInt q = a.at(t, c) / a.at(t, t);
        col_sub(c, t, q);
        if (a.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Make the pivot divide the rest of the matrix, so the diagonal comes
      // out as a divisibility chain without any later fix-up: pull a row
      // holding a non-divisible entry up into row t and reduce again.
      int vr = -1;
      for (int r = t + 1; r < a.rows && vr < 0; ++r)
        for (int c = t + 1; c < a.cols && vr < 0; ++c)
          if (a.at(r, c) % a.at(t, t) != 0) vr = r;
      if (vr < 0) return true;
      row_add(t, vr);
    }
  }
};

}  // namespace

SnfResult smith_normal_form(IntegerMatrix m) {
  const int rows = m.rows, cols = m.cols;
  Worker w{std::move(m), identity_matrix(rows), identity_matrix(cols)};
  const int n = rows < cols ? rows : cols;
  for (int t = 0; t < n; ++t)
    if (!w.reduce_at(t)) break;
  for (int t = 0; t < n; ++t)
    if (w.a.at(t, t) < 0) w.row_negate(t);
  SnfResult out;
  out.d = std::move(w.a);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  return out;
}

}  // namespace faceq
