#include "schur/glchar.hpp"

#include <stdexcept>

#include "schur/symfunc.hpp"

namespace schur {

RepMatrix sym_square_matrix(const RationalMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("sym_square_matrix: input must be 2x2");
  const Rational& a = m(0, 0);
  const Rational& b = m(0, 1);
  const Rational& c = m(1, 0);
  const Rational& d = m(1, 1);
  RepMatrix rep;
  rep.source_dim = 2;
  rep.target_dim = 3;
  rep.matrix = RationalMatrix(3, 3);
  rep.matrix << a * a, Rational(2) * a * b, b * b,
                a * c, a * d + b * c,       b * d,
                c * c, Rational(2) * c * d, d * d;
  return rep;
}

Rational char_sym_square(const RationalMatrix& a) {
  return sym_square_matrix(a).matrix.trace();
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("direct_sum: blocks must be square");
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.rows();
  RationalMatrix out = RationalMatrix::Zero(n + m, n + m);
  out.topLeftCorner(n, n) = a;
  out.bottomRightCorner(m, m) = b;
  return out;
}

Rational char_schur_eval(const Partition& lam, const std::vector<Rational>& eigenvalues) {
  if (lam.num_parts() > static_cast<int>(eigenvalues.size()))
    throw std::domain_error("char_schur_eval: more parts than eigenvalues");
  return evaluate(schur_to_monomial(lam), eigenvalues);
}

}  // namespace schur
