#pragma once

#include <vector>

#include "schur/matrix.hpp"
#include "schur/partitions.hpp"

namespace schur {

/// Matrix of a polynomial representation together with the dimensions of
/// the spaces it maps between.
struct RepMatrix {
  RationalMatrix matrix;
  Eigen::Index source_dim = 0;
  Eigen::Index target_dim = 0;
};

/// Symmetric-square representation of a 2x2 matrix [[a,b],[c,d]] in the
/// ordered basis (x^2, xy, y^2):
///
///   [[a^2, 2ab, b^2],
///    [ac,  ad+bc, bd],
///    [c^2, 2cd, d^2]]
RepMatrix sym_square_matrix(const RationalMatrix& a);

/// trace(sym_square_matrix(a)); equals trace(a)^2 - det(a), the value of
/// s_(2) at the eigenvalues of a.
Rational char_sym_square(const RationalMatrix& a);

/// Block-diagonal direct sum of two square matrices.
RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

/// Character value of the irreducible representation indexed by lam at
/// any matrix with the given spectrum: s_lam evaluated at the eigenvalues.
Rational char_schur_eval(const Partition& lam, const std::vector<Rational>& eigenvalues);

}  // namespace schur
