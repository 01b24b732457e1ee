#pragma once

#include <map>
#include <vector>

#include "schur/partitions.hpp"
#include "schur/rational.hpp"

namespace schur {

enum class Basis { monomial, schur };

/// Homogeneous symmetric polynomial of one degree, stored as an exact
/// coefficient vector over the partitions of that degree, in either the
/// monomial or the Schur basis. Storage is canonical: zero coefficients
/// are never kept, and iteration follows the canonical partition order.
///
/// The representation is variable-count-free; the number of variables
/// enters only at expansion or evaluation time, where partitions with
/// more parts than variables contribute nothing.
class SymPoly {
 public:
  using CoeffMap = std::map<Partition, Rational, PartitionCanonicalLess>;

  SymPoly(int degree, Basis basis);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient on lam (zero if absent).
  Rational coeff(const Partition& lam) const;

  /// Sets the coefficient on lam; lam must be a partition of degree().
  /// Setting zero erases the entry.
  void set_coeff(const Partition& lam, Rational value);

  /// Adds to the coefficient on lam, keeping storage canonical.
  void add_coeff(const Partition& lam, const Rational& value);

  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

 private:
  int degree_ = 0;
  Basis basis_ = Basis::monomial;
  CoeffMap coeffs_;
};

/// Coefficientwise sum; degree and basis must match.
SymPoly operator+(const SymPoly& f, const SymPoly& g);
SymPoly operator-(const SymPoly& f, const SymPoly& g);
/// Exact scalar multiple.
SymPoly operator*(const Rational& c, const SymPoly& f);
inline SymPoly operator*(const SymPoly& f, const Rational& c) { return c * f; }

/// The monomial basis element m_lam.
SymPoly monomial_sym(const Partition& lam);

/// s_lam written in the monomial basis: coefficient K(lam, mu) on m_mu
/// for every mu of the same degree.
SymPoly schur_to_monomial(const Partition& lam);

/// Change of basis monomial -> Schur via the inverse Kostka matrix.
/// Round-tripping through schur_to_monomial reproduces the input exactly.
SymPoly to_schur_basis(const SymPoly& f);

/// Change of basis Schur -> monomial (linear extension of
/// schur_to_monomial); accepts monomial input unchanged.
SymPoly to_monomial_basis(const SymPoly& f);

/// True iff every coefficient of to_schur_basis(f) is >= 0 (closed-cone
/// convention: boundary points count as positive). Requires monomial input.
bool is_schur_positive(const SymPoly& f);

/// A fully expanded polynomial: exponent vector -> coefficient, in a
/// fixed number of variables. Closed under permuting exponent positions.
struct MonomialExpansion {
  int nvars = 0;
  std::map<Composition, Rational> terms;
};

/// Full expansion of a monomial-basis f in n variables.
MonomialExpansion expand_in_variables(const SymPoly& f, int n);

/// Exact value of a monomial-basis f at the point x.
Rational evaluate(const SymPoly& f, const std::vector<Rational>& x);

}  // namespace schur
