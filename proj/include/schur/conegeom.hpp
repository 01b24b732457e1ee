#pragma once

#include <cstdint>
#include <vector>

#include "schur/matrix.hpp"
#include "schur/partitions.hpp"

namespace schur {

/// Affine frame for the coefficient-sum-1 slice of the monomial-positive
/// cone in one degree.
///
/// The origin is m_(1,...,1). For every other partition lam (in canonical
/// order, recorded in `order`):
///   - row lam of e_vectors is the monomial-basis coefficient vector of
///     m_lam - m_(1^k), over all partitions of k in canonical order;
///   - row lam of v_vectors expresses (1/k_lam) s_lam - s_(1^k) in the
///     e-vector basis (well defined because both endpoints have monomial
///     coefficients summing to 1).
struct SliceBasis {
  int degree = 0;
  Partition origin;                // (1,...,1)
  std::vector<Partition> order;    // partitions of degree except the origin
  RationalMatrix e_vectors;        // (p-1) x p, monomial coordinates
  RationalMatrix v_vectors;        // (p-1) x (p-1), e-basis coordinates
};

SliceBasis build_slice_basis(int k);

/// Exact probability that a random non-negative monomial-basis combination
/// of degree k is Schur positive: the product over partitions lam of k of
/// 1 / kostka_row_sum(lam).
Rational schur_positivity_probability(int k);

/// The same probability obtained from slice geometry: |det V| / |det E|,
/// where V stacks the v-vectors and E the e-vectors of build_slice_basis(k)
/// in the slice coordinates (the monomial coordinate of the origin is
/// projected out). Simplex normalization factors cancel in the ratio.
Rational slice_volume_ratio(int k);

/// Result of a Monte Carlo run; bit-reproducible for fixed
/// (degree, n_samples, seed) regardless of worker count.
struct MonteCarloReport {
  int degree = 0;
  long long n_samples = 0;
  std::uint64_t seed = 0;
  long long positive_count = 0;
  double estimate = 0.0;           // positive_count / n_samples
  double std_error = 0.0;          // sqrt(estimate * (1 - estimate) / n_samples)
  Rational exact_probability;      // schur_positivity_probability(degree)
};

/// Draws n_samples points uniformly from the simplex {a_lam >= 0,
/// sum a_lam = 1} over the partitions of k, converts each point exactly
/// to rational coefficients, and counts how many are Schur positive.
///
/// Sampling is counter-based: sample i draws from a SplitMix64 stream
/// whose state is a fixed mix of (seed, i), so the outcome depends only
/// on (k, n_samples, seed). `workers` <= 0 picks a hardware-based count;
/// any partitioning across workers yields the identical report.
MonteCarloReport sample_positivity(int k, long long n_samples, std::uint64_t seed,
                                   int workers = 0);

}  // namespace schur
