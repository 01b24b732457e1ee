#include "schur/symfunc.hpp"

#include <stdexcept>

#include "schur/kostka.hpp"
#include "schur/matrix.hpp"

namespace schur {

SymPoly::SymPoly(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw std::domain_error("SymPoly: degree must be non-negative");
}

Rational SymPoly::coeff(const Partition& lam) const {
  const auto it = coeffs_.find(lam);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymPoly::set_coeff(const Partition& lam, Rational value) {
  if (lam.size() != degree_)
    throw std::domain_error("SymPoly: partition degree does not match polynomial degree");
  if (value.is_zero())
    coeffs_.erase(lam);
  else
    coeffs_[lam] = std::move(value);
}

void SymPoly::add_coeff(const Partition& lam, const Rational& value) {
  set_coeff(lam, coeff(lam) + value);
}

SymPoly operator+(const SymPoly& f, const SymPoly& g) {
  if (f.degree() != g.degree()) throw std::domain_error("SymPoly: degree mismatch in sum");
  if (f.basis() != g.basis()) throw std::domain_error("SymPoly: basis mismatch in sum");
  SymPoly out = f;
  for (const auto& [lam, c] : g.coeffs()) out.add_coeff(lam, c);
  return out;
}

SymPoly operator-(const SymPoly& f, const SymPoly& g) { return f + Rational(-1) * g; }

SymPoly operator*(const Rational& c, const SymPoly& f) {
  SymPoly out(f.degree(), f.basis());
  if (c.is_zero()) return out;
  for (const auto& [lam, v] : f.coeffs()) out.set_coeff(lam, c * v);
  return out;
}

SymPoly monomial_sym(const Partition& lam) {
  SymPoly out(lam.size(), Basis::monomial);
  out.set_coeff(lam, Rational(1));
  return out;
}

SymPoly schur_to_monomial(const Partition& lam) {
  const auto& table = kostka_matrix(lam.size());
  SymPoly out(lam.size(), Basis::monomial);
  for (std::size_t i = 0; i < table.order.size(); ++i) {
    if (table.order[i] != lam) continue;
    for (std::size_t j = 0; j < table.order.size(); ++j) {
      const Rational& k = table.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (!k.is_zero()) out.set_coeff(table.order[j], k);
    }
    return out;
  }
  throw std::logic_error("schur_to_monomial: partition not found in its degree table");
}

SymPoly to_schur_basis(const SymPoly& f) {
  if (f.basis() != Basis::monomial)
    throw std::domain_error("to_schur_basis: input must be in the monomial basis");
  const auto& table = kostka_matrix(f.degree());
  const RationalMatrix& kinv = inverse_kostka_matrix(f.degree());
  const auto n = static_cast<Eigen::Index>(table.order.size());
  // Coefficients satisfy a = K^T c, so c = (K^{-1})^T a.
  SymPoly out(f.degree(), Basis::schur);
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational acc(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (kinv(i, j).is_zero()) continue;
      const Rational a = f.coeff(table.order[static_cast<std::size_t>(i)]);
      if (!a.is_zero()) acc += a * kinv(i, j);
    }
    if (!acc.is_zero()) out.set_coeff(table.order[static_cast<std::size_t>(j)], acc);
  }
  return out;
}

SymPoly to_monomial_basis(const SymPoly& f) {
  if (f.basis() == Basis::monomial) return f;
  SymPoly out(f.degree(), Basis::monomial);
  for (const auto& [lam, c] : f.coeffs()) {
    const SymPoly expanded = schur_to_monomial(lam);
    for (const auto& [mu, k] : expanded.coeffs()) out.add_coeff(mu, c * k);
  }
  return out;
}

bool is_schur_positive(const SymPoly& f) {
  if (f.basis() != Basis::monomial)
    throw std::domain_error("is_schur_positive: input must be in the monomial basis");
  const SymPoly g = to_schur_basis(f);
  for (const auto& [lam, c] : g.coeffs()) {
    (void)lam;
    if (c.sign() < 0) return false;
  }
  return true;
}

MonomialExpansion expand_in_variables(const SymPoly& f, int n) {
  if (f.basis() != Basis::monomial)
    throw std::domain_error("expand_in_variables: input must be in the monomial basis");
  if (n < 0) throw std::domain_error("expand_in_variables: variable count must be non-negative");
  MonomialExpansion out;
  out.nvars = n;
  for (const auto& [lam, c] : f.coeffs()) {
    for (const Composition& alpha : compositions_sorting_to(lam, n)) {
      out.terms[alpha] = c;  // distinct partitions yield disjoint exponent vectors
    }
  }
  return out;
}

Rational evaluate(const SymPoly& f, const std::vector<Rational>& x) {
  if (f.basis() != Basis::monomial)
    throw std::domain_error("evaluate: input must be in the monomial basis");
  const int n = static_cast<int>(x.size());
  Rational total(0);
  for (const auto& [lam, c] : f.coeffs()) {
    Rational basis_value(0);
    for (const Composition& alpha : compositions_sorting_to(lam, n)) {
      Rational term(1);
      for (int i = 0; i < n; ++i) {
        if (alpha[static_cast<std::size_t>(i)] != 0)
          term *= pow(x[static_cast<std::size_t>(i)],
                      static_cast<unsigned long>(alpha[static_cast<std::size_t>(i)]));
      }
      basis_value += term;
    }
    total += c * basis_value;
  }
  return total;
}

}  // namespace schur
