#include "qcomm/eigen_support.hpp"

namespace qcomm {

int exact_rank(DenseMatrix m) {
  int rows = (int)m.rows(), cols = (int)m.cols();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!m(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    m.row(p).swap(m.row(rank));
    Scalar inv = m(rank, c).inv();
    for (int k = c; k < cols; ++k) m(rank, k) *= inv;
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (int k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

DenseMatrix exact_inverse(const DenseMatrix& m) {
  int n = (int)m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::Constant(n, n, Scalar(0));
  for (int i = 0; i < n; ++i) inv(i, i) = Scalar(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) throw DivisionByZero();
    a.row(p).swap(a.row(c));
    inv.row(p).swap(inv.row(c));
    Scalar d = a(c, c).inv();
    for (int k = 0; k < n; ++k) {
      a(c, k) *= d;
      inv(c, k) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Scalar f = a(r, c);
      for (int k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

DenseVector exact_solve(const DenseMatrix& m, const DenseVector& b) {
  return exact_inverse(m) * b;
}

}  // namespace qcomm
