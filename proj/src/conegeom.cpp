#include "schur/conegeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "schur/kostka.hpp"
#include "schur/symfunc.hpp"

namespace schur {

Rational schur_positivity_probability(int k) {
  if (k < 1) throw std::domain_error("schur_positivity_probability: degree must be >= 1");
  Rational product(1);
  for (const Partition& lam : partitions_of(k)) {
    product *= Rational(1, kostka_row_sum(lam));
  }
  return product;
}

SliceBasis build_slice_basis(int k) {
  if (k < 1) throw std::domain_error("build_slice_basis: degree must be >= 1");
  const std::vector<Partition> all = partitions_of(k);
  const auto p = static_cast<Eigen::Index>(all.size());

  SliceBasis basis;
  basis.degree = k;
  basis.origin = all.back();  // (1,...,1) is last in canonical order
  basis.order.assign(all.begin(), all.end() - 1);
  basis.e_vectors = RationalMatrix::Zero(p - 1, p);
  basis.v_vectors = RationalMatrix::Zero(p - 1, p - 1);

  const SymPoly origin_poly = monomial_sym(basis.origin);
  for (Eigen::Index row = 0; row < p - 1; ++row) {
    const Partition& lam = basis.order[static_cast<std::size_t>(row)];

    const SymPoly e = monomial_sym(lam) - origin_poly;
    for (Eigen::Index col = 0; col < p; ++col)
      basis.e_vectors(row, col) = e.coeff(all[static_cast<std::size_t>(col)]);

    // (1/k_lam) s_lam - s_(1^k), as a monomial-basis polynomial. Both
    // endpoints have coefficient sum 1, so the difference sums to 0 and
    // its e-basis coordinates are simply its coefficients away from the
    // origin partition.
    const SymPoly v = Rational(1, kostka_row_sum(lam)) * schur_to_monomial(lam) -
                      schur_to_monomial(basis.origin);
    Rational coefficient_sum(0);
    for (const auto& [mu, c] : v.coeffs()) {
      (void)mu;
      coefficient_sum += c;
    }
    if (!coefficient_sum.is_zero())
      throw std::logic_error("build_slice_basis: v-vector does not lie in the slice");
    for (Eigen::Index col = 0; col < p - 1; ++col)
      basis.v_vectors(row, col) = v.coeff(all[static_cast<std::size_t>(col)]);
  }
  return basis;
}

Rational slice_volume_ratio(int k) {
  const SliceBasis basis = build_slice_basis(k);
  const auto d = basis.e_vectors.rows();
  // Slice coordinates: drop the origin partition's monomial coordinate
  // (it is determined by the coefficient-sum constraint).
  const RationalMatrix e_projected = basis.e_vectors.leftCols(d);
  const Rational det_e = determinant(e_projected);
  const Rational det_v = determinant(basis.v_vectors);
  return abs(det_v) / abs(det_e);
}

namespace {

// SplitMix64 (Steele, Lea & Vigna): fixed, published mixing constants.
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// The stream for sample i is a pure function of (seed, i): chunking the
// index range across workers cannot change any draw.
SplitMix64 sample_stream(std::uint64_t seed, long long index) {
  return SplitMix64(mix64(seed + kGolden * static_cast<std::uint64_t>(index + 1)));
}

double exponential_variate(SplitMix64& gen) {
  // Uniform in (0, 1], so the log is finite.
  const double u = static_cast<double>((gen.next() >> 11) + 1) * 0x1.0p-53;
  return -std::log(u);
}

long long count_positive(int k, const std::vector<Partition>& order, std::uint64_t seed,
                         long long begin, long long end) {
  long long positive = 0;
  for (long long i = begin; i < end; ++i) {
    SplitMix64 gen = sample_stream(seed, i);
    // Normalized iid exponentials are uniform on the simplex; the
    // doubles are dyadic rationals, so the conversion is exact and the
    // positivity test below involves no rounding at all.
    std::vector<Rational> weights;
    weights.reserve(order.size());
    Rational total(0);
    for (std::size_t j = 0; j < order.size(); ++j) {
      weights.push_back(Rational::from_double(exponential_variate(gen)));
      total += weights.back();
    }
    SymPoly f(k, Basis::monomial);
    if (!total.is_zero()) {
      for (std::size_t j = 0; j < order.size(); ++j)
        f.set_coeff(order[j], weights[j] / total);
    }
    if (is_schur_positive(f)) ++positive;
  }
  return positive;
}

}  // namespace

MonteCarloReport sample_positivity(int k, long long n_samples, std::uint64_t seed, int workers) {
  if (k < 1) throw std::domain_error("sample_positivity: degree must be >= 1");
  if (n_samples < 1) throw std::domain_error("sample_positivity: need at least one sample");

  const std::vector<Partition> order = partitions_of(k);
  kostka_matrix(k);  // warm the shared caches before any workers start
  inverse_kostka_matrix(k);

  long long worker_count = workers > 0
                               ? workers
                               : static_cast<long long>(std::max(1u, std::thread::hardware_concurrency()));
  worker_count = std::min(worker_count, n_samples);

  long long positive = 0;
  if (worker_count <= 1) {
    positive = count_positive(k, order, seed, 0, n_samples);
  } else {
    std::vector<long long> counts(static_cast<std::size_t>(worker_count), 0);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(worker_count));
    const long long chunk = (n_samples + worker_count - 1) / worker_count;
    for (long long w = 0; w < worker_count; ++w) {
      const long long begin = w * chunk;
      const long long end = std::min(n_samples, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        counts[static_cast<std::size_t>(w)] = count_positive(k, order, seed, begin, end);
      });
    }
    for (auto& t : threads) t.join();
    for (long long c : counts) positive += c;  // integer merge: order-independent
  }

  MonteCarloReport report;
  report.degree = k;
  report.n_samples = n_samples;
  report.seed = seed;
  report.positive_count = positive;
  report.estimate = static_cast<double>(positive) / static_cast<double>(n_samples);
  report.std_error =
      std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(n_samples));
  report.exact_probability = schur_positivity_probability(k);
  return report;
}

}  // namespace schur
