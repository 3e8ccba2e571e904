#ifndef KGD_RATIONAL_HPP
#define KGD_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "kgd/bigint.hpp"

namespace kgd {

/// Exact rational with BigInt numerator/denominator, always in lowest terms
/// with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit
  Rational(std::int64_t num, std::int64_t den)
      : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  /// Exact value of a finite double (dyadic rational).
  static Rational from_double_exact(double x);

  std::string to_string() const;  // "p/q" or "p"

  std::size_t hash() const;

 private:
  BigInt num_, den_;
};

/// Best rational approximation to x among denominators <= max_denominator,
/// via continued fractions with semiconvergent refinement.  Throws
/// domain_error on non-finite input or max_denominator < 1.
Rational rationalize(double x, std::int64_t max_denominator);

}  // namespace kgd

#endif  // KGD_RATIONAL_HPP
