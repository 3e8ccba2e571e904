#include "kgd/rational.hpp"

#include <cmath>
#include <limits>

#include "kgd/errors.hpp"

namespace kgd {

Rational::Rational(BigInt num, BigInt den) : num_(num), den_(den) {
  if (den_.is_zero()) throw domain_error("Rational: zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  if (num_.fits_int64() && den_.fits_int64()) {
    return static_cast<double>(num_.to_int64()) /
           static_cast<double>(den_.to_int64());
  }
  // Scale so the quotient carries >= 62 significant bits, divide, rescale.
  int shift = static_cast<int>(den_.bit_length()) + 62 -
              static_cast<int>(num_.bit_length());
  BigInt scaled = shift >= 0 ? (num_ << static_cast<unsigned>(shift))
                             : (num_ >> static_cast<unsigned>(-shift));
  BigInt q = scaled / den_;
  return std::ldexp(q.to_double(), -shift);
}

Rational Rational::from_double_exact(double x) {
  if (!std::isfinite(x)) throw domain_error("from_double_exact: non-finite");
  if (x == 0.0) return Rational();
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5,1)
  std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num(m), den(1);
  if (exp >= 0)
    num = num << static_cast<unsigned>(exp);
  else
    den = den << static_cast<unsigned>(-exp);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::size_t Rational::hash() const {
  return num_.hash() * 1000003u ^ den_.hash();
}

Rational rationalize(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw domain_error("rationalize: non-finite input");
  if (max_denominator < 1)
    throw domain_error("rationalize: max_denominator < 1");
  const Rational target = Rational::from_double_exact(x);
  // Stern-Brocot style continued fraction walk over the exact dyadic value.
  BigInt p0(0), q0(1), p1(1), q1(0);
  Rational frac = target;
  bool neg = frac.sign() < 0;
  if (neg) frac = -frac;
  const BigInt cap(max_denominator);
  Rational rem = frac;
  for (int iter = 0; iter < 128; ++iter) {
    BigInt a = rem.num() / rem.den();
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    if (q2 > cap) {
      // Best semiconvergent: largest k with q0 + k*q1 <= cap.
      BigInt k = (cap - q0) / q1;
      BigInt ps = p0 + k * p1;
      BigInt qs = q0 + k * q1;
      Rational conv(p1, q1);
      Rational semi(ps, qs);
      Rational err_conv = (conv - frac).abs();
      Rational err_semi = (semi - frac).abs();
      Rational best = (q1 <= cap && err_conv <= err_semi) ? conv : semi;
      return neg ? -best : best;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational next = rem - Rational(a, BigInt(1));
    if (next.is_zero()) break;
    rem = Rational(next.den(), next.num());
  }
  Rational best(p1, q1);
  return neg ? -best : best;
}

}  // namespace kgd
