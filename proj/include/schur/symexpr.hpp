#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schur/symfunc.hpp"

namespace schur {

/// Error from the symmetric-polynomial expression grammar, carrying the
/// 0-based offset of the offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// One signed term of a parsed expression.
struct SymExprTerm {
  Rational coefficient;
  Basis basis = Basis::monomial;
  Partition partition;
};

/// Parse tree for the expression grammar shared by the library and CLI:
///
///   expr  := ['-'] term (('+' | '-') term)*
///   term  := [coeff '*'] basis '[' int (',' int)* ']'
///   coeff := int | int '/' int
///   basis := 'm' | 's'
///
/// Whitespace is insignificant. All terms must share one basis letter and
/// one degree; bracket contents must be weakly decreasing positive
/// integers.
struct SymExpr {
  std::vector<SymExprTerm> terms;
  Basis basis = Basis::monomial;
  int degree = 0;

  /// Collects the terms into a polynomial (duplicate partitions add up).
  SymPoly to_sympoly() const;
};

SymExpr parse_symexpr(std::string_view text);

/// Renders in the same grammar, terms in canonical partition order:
/// "s[2,1] - 2*s[1,1,1]", "1/3*m[3]". The zero polynomial renders as "0".
/// For nonzero input, parse_symexpr(render_symexpr(f)).to_sympoly() == f.
std::string render_symexpr(const SymPoly& f);

}  // namespace schur
