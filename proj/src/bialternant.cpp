#include "schur/bialternant.hpp"

#include <stdexcept>

#include "schur/matrix.hpp"

namespace schur {

namespace {

RationalMatrix power_matrix(const std::vector<Rational>& x, const std::vector<int>& exponents) {
  const auto n = static_cast<Eigen::Index>(x.size());
  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = pow(x[static_cast<std::size_t>(i)],
                    static_cast<unsigned long>(exponents[static_cast<std::size_t>(j)]));
    }
  }
  return m;
}

}  // namespace

Rational vandermonde(const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> exponents(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) exponents[static_cast<std::size_t>(j)] = n - 1 - j;
  return determinant(power_matrix(x, exponents));
}

Rational bialternant_eval(const Partition& mu, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  if (mu.num_parts() > n)
    throw std::domain_error("bialternant_eval: more parts than evaluation points");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)])
        throw std::domain_error("bialternant_eval: repeated evaluation point (singular denominator)");
    }
  }
  std::vector<int> exponents(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) exponents[static_cast<std::size_t>(j)] = mu.part_or_zero(j) + n - 1 - j;
  const Rational numerator = determinant(power_matrix(x, exponents));
  return numerator / vandermonde(x);
}

}  // namespace schur
