#ifndef KGD_BIGINT_HPP
#define KGD_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kgd {

/// Signed arbitrary-precision integer, little-endian 32-bit limbs.
///
/// Sized for certificate arithmetic (hundreds of digits at most), so the
/// classic schoolbook algorithms are used throughout.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by design, mirrors int

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);  // trunc
  friend BigInt operator%(const BigInt& a, const BigInt& b);  // trunc
  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  /// Truncated division, quotient and remainder in one pass.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt operator<<(unsigned bits) const;
  BigInt operator>>(unsigned bits) const;

  static BigInt gcd(BigInt a, BigInt b);

  /// floor(sqrt(x)) for x >= 0; throws domain_error on negative input.
  static BigInt isqrt(const BigInt& x);

  /// Bit length of |x| (0 for zero).
  unsigned bit_length() const;

  bool fits_int64() const;
  std::int64_t to_int64() const;  // undefined unless fits_int64()
  double to_double() const;

  std::string to_string() const;

  std::size_t hash() const;

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;  // no trailing zero limbs

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
};

}  // namespace kgd

#endif  // KGD_BIGINT_HPP
