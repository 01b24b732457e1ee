#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar.
///
/// Values are always kept in lowest terms with a positive denominator.
/// All arithmetic is exact; there is no floating-point path. Conversion
/// *from* double is exact (every finite double is a dyadic rational);
/// conversion *to* double is the only lossy operation and is provided
/// for display purposes.
class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design, enables literals
  Rational(const BigInt& n) : value_(n) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    value_ = Backend(num, den);  // canonicalizes to lowest terms
  }
  explicit Rational(Backend v) : value_(std::move(v)) {}

  /// Exact value of a finite double (dyadic rational).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
    return Rational(Backend(x));
  }

  /// Parses "num" or "num/den" with optional leading sign on num.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  double to_double() const { return value_.convert_to<double>(); }

  /// Canonical text form: "num" when integral, otherwise "num/den".
  std::string str() const { return value_.str(); }

  const Backend& backend() const { return value_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(Backend(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(Backend(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(Backend(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(Backend(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(Backend(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.value_;
  }

 private:
  Backend value_;  // cpp_rational maintains lowest terms, positive denominator
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^e by repeated squaring; pow(0, 0) == 1 (empty product).
inline Rational pow(const Rational& r, unsigned long e) {
  Rational result(1);
  Rational base = r;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

inline Rational Rational::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational::parse: missing digits");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw std::invalid_argument("Rational::parse: invalid character in '" + std::string(s) + "'");
    }
    return BigInt(std::string(s));
  };
  text = strip(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(strip(text.substr(0, slash)));
  const BigInt den = parse_int(strip(text.substr(slash + 1)));
  return Rational(num, den);
}

}  // namespace schur
