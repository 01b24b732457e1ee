#pragma once

#include <Eigen/Core>

#include <stdexcept>

#include "schur/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<schur::Rational> : GenericNumTraits<schur::Rational> {
  using Real = schur::Rational;
  using NonInteger = schur::Rational;
  using Literal = schur::Rational;
  using Nested = schur::Rational;
  static inline Real epsilon() { return schur::Rational(0); }
  static inline Real dummy_precision() { return schur::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 40
  };
};

}  // namespace Eigen

namespace schur {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Works for any exact field scalar; every division in the sweep is exact
/// by construction, which keeps intermediate entries from blowing up the
/// way plain Gaussian elimination over rationals does. The determinant of
/// the empty 0x0 matrix is 1 (empty product).
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> w = m;
  Scalar prev_pivot(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (w(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && w(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      w.row(k).swap(w.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev_pivot;
      }
      w(i, k) = Scalar(0);
    }
    prev_pivot = w(k, k);
  }
  Scalar det = w(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Exact matrix product with an explicit dimension check (Eigen only
/// asserts in debug builds).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> mat_mul(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: inner dimensions do not match");
  return a * b;
}

/// Inverse of an upper unitriangular matrix by back substitution.
/// The result has entries in the same subring as the input (no divisions),
/// which is what makes the inverse Kostka matrix integral.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
inverse_upper_unitriangular(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse_upper_unitriangular: matrix must be square");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i) != Scalar(1))
      throw std::invalid_argument("inverse_upper_unitriangular: diagonal entry is not 1");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (m(i, j) != Scalar(0))
        throw std::invalid_argument("inverse_upper_unitriangular: nonzero below the diagonal");
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> inv =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    inv(j, j) = Scalar(1);
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      Scalar acc(0);
      for (Eigen::Index l = i + 1; l <= j; ++l) acc += m(i, l) * inv(l, j);
      inv(i, j) = Scalar(-acc);
    }
  }
  return inv;
}

}  // namespace schur
