#include "schur/symexpr.hpp"

#include <cctype>

namespace schur {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymExpr parse() {
    SymExpr expr;
    skip_ws();
    bool negate = consume('-');
    parse_term(expr, negate);
    skip_ws();
    while (!at_end()) {
      if (consume('+'))
        parse_term(expr, false);
      else if (consume('-'))
        parse_term(expr, true);
      else
        throw ParseError("expected '+' or '-'", pos_);
      skip_ws();
    }
    return expr;
  }

 private:
  void parse_term(SymExpr& expr, bool negate) {
    skip_ws();
    if (at_end()) throw ParseError("expected term", pos_);
    Rational coefficient(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_coeff();
      skip_ws();
      if (!consume('*')) throw ParseError("expected '*' after coefficient", pos_);
      skip_ws();
    }
    const std::size_t basis_pos = pos_;
    Basis basis;
    if (consume('m'))
      basis = Basis::monomial;
    else if (consume('s'))
      basis = Basis::schur;
    else
      throw ParseError("expected basis letter 'm' or 's'", pos_);

    Partition partition = parse_partition();
    if (expr.terms.empty()) {
      expr.basis = basis;
      expr.degree = partition.size();
    } else {
      if (basis != expr.basis)
        throw ParseError("mixed 'm' and 's' terms in one expression", basis_pos);
      if (partition.size() != expr.degree)
        throw ParseError("degree mismatch: term has degree " + std::to_string(partition.size()) +
                             ", expected " + std::to_string(expr.degree),
                         basis_pos);
    }
    if (negate) coefficient = -coefficient;
    expr.terms.push_back(SymExprTerm{coefficient, basis, std::move(partition)});
  }

  Rational parse_coeff() {
    const BigInt numerator = parse_int();
    skip_ws();
    if (!consume('/')) return Rational(numerator);
    skip_ws();
    const std::size_t den_pos = pos_;
    const BigInt denominator = parse_int();
    if (denominator == 0) throw ParseError("zero denominator", den_pos);
    return Rational(numerator, denominator);
  }

  Partition parse_partition() {
    skip_ws();
    const std::size_t open_pos = pos_;
    if (!consume('[')) throw ParseError("expected '['", pos_);
    std::vector<int> parts;
    while (true) {
      skip_ws();
      const std::size_t part_pos = pos_;
      const BigInt value = parse_int();
      if (value < 1) throw ParseError("partition parts must be positive", part_pos);
      if (value > 1'000'000) throw ParseError("partition part too large", part_pos);
      const int part = value.convert_to<int>();
      if (!parts.empty() && parts.back() < part)
        throw ParseError("partition parts must be weakly decreasing", part_pos);
      parts.push_back(part);
      skip_ws();
      if (consume(']')) break;
      if (!consume(',')) throw ParseError("expected ',' or ']'", pos_);
    }
    try {
      return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), open_pos);
    }
  }

  BigInt parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymPoly SymExpr::to_sympoly() const {
  SymPoly out(degree, basis);
  for (const auto& term : terms) out.add_coeff(term.partition, term.coefficient);
  return out;
}

SymExpr parse_symexpr(std::string_view text) { return Parser(text).parse(); }

std::string render_symexpr(const SymPoly& f) {
  if (f.is_zero()) return "0";
  const char letter = f.basis() == Basis::monomial ? 'm' : 's';
  std::string out;
  for (const auto& [lam, c] : f.coeffs()) {
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (magnitude != Rational(1)) {
      out += magnitude.str();
      out += '*';
    }
    out += letter;
    out += lam.to_string();
  }
  return out;
}

}  // namespace schur
