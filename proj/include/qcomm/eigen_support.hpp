#pragma once

#include <Eigen/Core>

#include "qcomm/cyclotomic.hpp"

namespace Eigen {

// Enough traits for dense storage and products of exact field scalars.
// Pivoting decompositions want absolute values and thresholds, which a
// cyclotomic field does not order, so the exact kernels below replace
// them with plain Gauss-Jordan free functions.
template <>
struct NumTraits<qcomm::Scalar> {
  typedef qcomm::Scalar Real;
  typedef qcomm::Scalar NonInteger;
  typedef qcomm::Scalar Literal;
  typedef qcomm::Scalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return qcomm::Scalar(0); }
  static inline Real dummy_precision() { return qcomm::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qcomm {

using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

/// Rank by exact forward elimination; the input is taken by value and
/// consumed.
int exact_rank(DenseMatrix m);

/// Inverse by exact Gauss-Jordan; throws DivisionByZero when singular.
DenseMatrix exact_inverse(const DenseMatrix& m);

/// Solves m x = b exactly for square invertible m.
DenseVector exact_solve(const DenseMatrix& m, const DenseVector& b);

}  // namespace qcomm
