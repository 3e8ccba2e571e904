#include "kgd/exact_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kgd/errors.hpp"

namespace kgd {

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n) {
  if (n <= 0) throw domain_error("squarefree_split: radicand must be positive");
  std::int64_t outer = 1, rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      outer *= p;
    }
  }
  return {outer, rest};
}

ExactScalar::ExactScalar(std::int64_t v) {
  if (v != 0) terms_.push_back({1, Rational(v)});
}

ExactScalar::ExactScalar(const Rational& q) {
  if (!q.is_zero()) terms_.push_back({1, q});
}

void ExactScalar::add_term(std::int64_t s, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), s,
      [](const auto& t, std::int64_t key) { return t.first < key; });
  if (it != terms_.end() && it->first == s) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {s, coeff});
  }
}

ExactScalar ExactScalar::canonicalize(
    const std::vector<std::pair<std::int64_t, Rational>>& raw) {
  ExactScalar out;
  for (const auto& [rad, coeff] : raw) {
    auto [outer, sf] = squarefree_split(rad);
    out.add_term(sf, coeff * Rational(outer));
  }
  return out;
}

ExactScalar ExactScalar::sqrt_term(std::int64_t s, const Rational& q) {
  return canonicalize({{s, q}});
}

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

Rational ExactScalar::rational_part() const { return coefficient(1); }

Rational ExactScalar::coefficient(std::int64_t radicand) const {
  for (const auto& [s, q] : terms_)
    if (s == radicand) return q;
  return Rational();
}

std::vector<std::int64_t> ExactScalar::radicands() const {
  std::vector<std::int64_t> out;
  out.reserve(terms_.size());
  for (const auto& [s, q] : terms_) out.push_back(s);
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& [s, q] : r.terms_) q = -q;
  return r;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r = a;
  for (const auto& [s, q] : b.terms_) r.add_term(s, q);
  return r;
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r = a;
  for (const auto& [s, q] : b.terms_) r.add_term(s, -q);
  return r;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (const auto& [s1, q1] : a.terms_) {
    for (const auto& [s2, q2] : b.terms_) {
      // sqrt(s1)*sqrt(s2) = g*sqrt(s1*s2/g^2) with g = gcd(s1,s2).
      std::int64_t g = std::gcd(s1, s2);
      std::int64_t rad = (s1 / g) * (s2 / g);
      r.add_term(rad, q1 * q2 * Rational(g));
    }
  }
  return r;
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) throw domain_error("ExactScalar: division by zero");
  if (b.is_rational()) {
    ExactScalar r = a;
    Rational inv = Rational(1) / b.rational_part();
    for (auto& [s, q] : r.terms_) q *= inv;
    return r;
  }
  // Eliminate one prime from the denominator's radicands by conjugation:
  // write b = u + v*sqrt(p), then a/b = a*(u - v*sqrt(p)) / (u^2 - p*v^2).
  std::int64_t p = 0;
  for (const auto& [s, q] : b.terms_) {
    if (s > 1) {
      for (std::int64_t f = 2; f * f <= s; ++f) {
        if (s % f == 0) {
          p = f;
          break;
        }
      }
      if (p == 0) p = s;  // s prime
      break;
    }
  }
  ExactScalar u, v;
  for (const auto& [s, q] : b.terms_) {
    if (s % p == 0)
      v.add_term(s / p, q);
    else
      u.add_term(s, q);
  }
  ExactScalar conj = u - v * ExactScalar::sqrt_term(p);
  ExactScalar denom = b * conj;  // = u^2 - p*v^2, one prime fewer
  return (a * conj) / denom;
}

int ExactScalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_[0].second.sign();
  // All-positive or all-negative coefficients decide immediately.
  bool all_pos = true, all_neg = true;
  for (const auto& [s, q] : terms_) {
    if (q.sign() > 0) all_neg = false;
    if (q.sign() < 0) all_pos = false;
  }
  if (all_pos) return 1;
  if (all_neg) return -1;
  // Interval refinement; terminates because the value is exactly nonzero
  // (distinct squarefree radicands are linearly independent over Q).
  for (unsigned bits = 64;; bits *= 2) {
    RationalInterval acc{Rational(0), Rational(0)};
    for (const auto& [s, q] : terms_) {
      RationalInterval root = s == 1
                                  ? RationalInterval(Rational(1))
                                  : RationalInterval::sqrt_of(Rational(s), bits);
      acc = acc + root * RationalInterval(q);
    }
    if (acc.lo().sign() > 0) return 1;
    if (acc.hi().sign() < 0) return -1;
    if (bits > 4096)
      throw domain_error("ExactScalar::sign: refinement failed to converge");
  }
}

double ExactScalar::to_double() const {
  long double acc = 0.0L;
  for (const auto& [s, q] : terms_) {
    long double c = static_cast<long double>(q.to_double());
    acc += c * sqrtl(static_cast<long double>(s));
  }
  return static_cast<double>(acc);
}

std::optional<ExactScalar> ExactScalar::exact_sqrt() const {
  int sg = sign();
  if (sg < 0) throw domain_error("exact_sqrt of negative value");
  if (sg == 0) return ExactScalar();
  if (is_rational()) {
    // sqrt(p/q) = sqrt(p*q)/q, always representable.
    Rational q = rational_part();
    BigInt pq = q.num() * q.den();
    if (!pq.fits_int64()) return std::nullopt;
    auto [outer, sf] = squarefree_split(pq.to_int64());
    return sqrt_term(sf, Rational(BigInt(outer), q.den()));
  }
  if (terms_.size() == 2 && terms_[0].first == 1) {
    // Solve (x + y*sqrt(s))^2 = a + b*sqrt(s).
    Rational a = terms_[0].second, b = terms_[1].second;
    std::int64_t s = terms_[1].first;
    Rational disc = a * a - Rational(s) * b * b;
    if (disc.sign() < 0) return std::nullopt;
    // Need disc to be the square of a rational.
    BigInt rn = BigInt::isqrt(disc.num()), rd = BigInt::isqrt(disc.den());
    if (rn * rn != disc.num() || rd * rd != disc.den()) return std::nullopt;
    Rational r(rn, rd);
    for (int branch = 0; branch < 2; ++branch) {
      Rational x2 = (branch == 0 ? a + r : a - r) / Rational(2);
      if (x2.sign() < 0) continue;
      BigInt xn = BigInt::isqrt(x2.num()), xd = BigInt::isqrt(x2.den());
      if (xn * xn != x2.num() || xd * xd != x2.den()) continue;
      Rational x(xn, xd);
      if (x.is_zero()) continue;
      Rational y = b / (Rational(2) * x);
      ExactScalar cand = ExactScalar(x) + sqrt_term(s, y);
      if (cand.sign() > 0 && cand * cand == *this) return cand;
      cand = -cand;
      if (cand.sign() > 0 && cand * cand == *this) return cand;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, q] : terms_) {
    std::string piece = q.to_string();
    if (s != 1) piece += "*sqrt(" + std::to_string(s) + ")";
    if (!first && q.sign() >= 0) out += "+";
    out += piece;
    first = false;
  }
  return out;
}

std::size_t ExactScalar::hash() const {
  std::size_t h = 0x2545f4914f6cdd1dull;
  for (const auto& [s, q] : terms_) {
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
    h ^= q.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw domain_error("RationalInterval: hi < lo");
}

RationalInterval operator+(const RationalInterval& a,
                           const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a,
                           const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a,
                           const RationalInterval& b) {
  Rational c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_;
  Rational c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return {lo, hi};
}

RationalInterval operator/(const RationalInterval& a,
                           const RationalInterval& b) {
  if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
    throw domain_error("RationalInterval: division by interval containing 0");
  RationalInterval inv{Rational(1) / b.hi_, Rational(1) / b.lo_};
  return a * inv;
}

RationalInterval RationalInterval::pi() {
  // 64 correct digits; the sandwich width is 1e-63.
  static const char* kPiDigits =
      "3141592653589793238462643383279502884197169399375105820974944592";
  BigInt num = BigInt::from_string(kPiDigits);
  BigInt den(1);
  for (int i = 0; i < 63; ++i) den = den * BigInt(10);
  Rational lo(num, den);
  Rational hi(num + BigInt(1), den);
  return {lo, hi};
}

RationalInterval RationalInterval::sqrt_of(const Rational& q, unsigned bits) {
  if (q.sign() < 0) throw domain_error("sqrt_of: negative");
  if (q.is_zero()) return RationalInterval(Rational(0));
  // floor(sqrt(num*den) * 2^bits) / (den * 2^bits) brackets sqrt(num/den).
  BigInt scaled = (q.num() * q.den()) << (2 * bits);
  BigInt root = BigInt::isqrt(scaled);
  BigInt denom = q.den() << bits;
  return {Rational(root, denom), Rational(root + BigInt(1), denom)};
}

}  // namespace kgd
