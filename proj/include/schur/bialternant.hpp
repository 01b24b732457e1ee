#pragma once

#include <vector>

#include "schur/partitions.hpp"
#include "schur/rational.hpp"

namespace schur {

/// Vandermonde determinant det(x_i^{n-j}) = prod_{i<j} (x_i - x_j),
/// computed as an actual determinant (the closed-form product is the
/// test oracle, not the implementation).
Rational vandermonde(const std::vector<Rational>& x);

/// Schur polynomial value via the Jacobi quotient of determinants:
/// det(x_i^{mu_j + n - j}) / det(x_i^{n - j}), with mu zero-padded to
/// n = x.size(). Requires pairwise distinct evaluation points and
/// at most n parts in mu; no limit is taken at coincident points.
Rational bialternant_eval(const Partition& mu, const std::vector<Rational>& x);

}  // namespace schur
