#ifndef KGD_EXACT_SCALAR_HPP
#define KGD_EXACT_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgd/rational.hpp"

namespace kgd {

/// Element of a real multi-quadratic field: a finite sum  sum_s q_s * sqrt(s)
/// over distinct squarefree positive integer radicands s, with rational
/// coefficients.  Radicand 1 carries the rational part.  The representation
/// is canonical (radicands squarefree and sorted, no zero coefficients), so
/// equality of values is equality of representations.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t v);  // NOLINT: implicit
  ExactScalar(const Rational& q);  // NOLINT: implicit

  /// Build from raw (radicand, coefficient) terms; radicands need not be
  /// squarefree or distinct (sqrt(12) becomes 2*sqrt(3), duplicates merge).
  /// Throws domain_error if any radicand is <= 0.
  static ExactScalar canonicalize(
      const std::vector<std::pair<std::int64_t, Rational>>& raw);

  /// q * sqrt(s); s must be positive (reduced to squarefree form).
  static ExactScalar sqrt_term(std::int64_t s, const Rational& q = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational part (coefficient of radicand 1).
  Rational rational_part() const;
  /// Coefficient of the given squarefree radicand (zero if absent).
  Rational coefficient(std::int64_t radicand) const;
  const std::vector<std::pair<std::int64_t, Rational>>& terms() const {
    return terms_;
  }
  std::vector<std::int64_t> radicands() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  /// Exact division; throws domain_error when b == 0.
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return !(a == b);
  }

  /// Exact sign: 0 iff the value is zero (decided structurally), otherwise
  /// +-1 decided by interval refinement with arbitrary-precision square
  /// root enclosures.  Always terminates.
  int sign() const;
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) {
    return b < a;
  }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) {
    return !(b < a);
  }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) {
    return !(a < b);
  }

  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  /// Exact square root if it exists in a (multi-)quadratic field this code
  /// can reach: rational values always; two-term values a + b*sqrt(s) when
  /// solvable.  Returns nullopt otherwise.  Throws on negative values.
  std::optional<ExactScalar> exact_sqrt() const;

  std::string to_string() const;

  std::size_t hash() const;

 private:
  // Sorted by radicand; no zero coefficients; radicands squarefree.
  std::vector<std::pair<std::int64_t, Rational>> terms_;

  void add_term(std::int64_t squarefree_radicand, const Rational& coeff);
};

/// Squarefree decomposition n = square * squarefree_part; returns
/// (sqrt(square), squarefree_part).  n must be positive.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n);

/// Closed rational interval [lo, hi]; used to certify values that are not
/// exactly representable (pi, gamma-function ratios).
class RationalInterval {
 public:
  RationalInterval() : lo_(0), hi_(0) {}
  RationalInterval(Rational point) : lo_(point), hi_(point) {}  // NOLINT
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  double mid_double() const { return ((lo_ + hi_) / Rational(2)).to_double(); }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }

  friend RationalInterval operator+(const RationalInterval& a,
                                    const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a,
                                    const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a,
                                    const RationalInterval& b);
  friend RationalInterval operator/(const RationalInterval& a,
                                    const RationalInterval& b);

  /// Entirely below / above comparisons (certified).
  bool certainly_less(const RationalInterval& o) const { return hi_ < o.lo_; }
  bool certainly_greater(const RationalInterval& o) const {
    return lo_ > o.hi_;
  }

  /// Enclosure of pi from a stored 64-digit sandwich.
  static RationalInterval pi();

  /// Enclosure of sqrt(q) for nonnegative rational q, to ~bits of precision.
  static RationalInterval sqrt_of(const Rational& q, unsigned bits = 128);

 private:
  Rational lo_, hi_;
};

}  // namespace kgd

#endif  // KGD_EXACT_SCALAR_HPP
