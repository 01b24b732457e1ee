#pragma once

#include <vector>

#include "schur/matrix.hpp"
#include "schur/partitions.hpp"

namespace schur {

/// The full Kostka table for one degree: entries(i, j) = K(order[i], order[j])
/// over the canonical partition list. Upper unitriangular because the
/// canonical order refines dominance.
struct KostkaMatrix {
  int degree = 0;
  std::vector<Partition> order;
  RationalMatrix entries;
};

/// K(shape, content): the number of SSYT of the given shape whose entries
/// realize the given content. Zero when |shape| != |content|.
long long kostka_number(const Partition& shape, const Partition& content);

/// Cached Kostka table for degree k (computed once, immutable thereafter;
/// safe for concurrent readers).
const KostkaMatrix& kostka_matrix(int k);

/// Exact inverse of kostka_matrix(k).entries. Integral by unitriangularity.
/// Cached like kostka_matrix.
const RationalMatrix& inverse_kostka_matrix(int k);

/// Row sum of the Kostka table at lam: the number of SSYT of shape lam
/// whose content is a partition of |lam|. Normalizes the Schur vertices
/// onto the coefficient-sum-1 slice in the cone-geometry module.
long long kostka_row_sum(const Partition& lam);

}  // namespace schur
