#include "kgd/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "kgd/errors.hpp"

namespace kgd {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                          : ~static_cast<std::uint64_t>(v) + 1ull;
  mag_.push_back(static_cast<std::uint32_t>(m));
  if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.mag_.size() != b.mag_.size())
    return a.mag_.size() < b.mag_.size() ? -1 : 1;
  for (std::size_t i = a.mag_.size(); i-- > 0;) {
    if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<std::uint32_t> out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) -
                     borrow;
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_;
  } else {
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
      r.sign_ = b.sign_;
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (std::size_t i = 0; i < a.mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.mag_.size(); ++j) {
      std::uint64_t cur = r.mag_[i + j] +
                          static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                          carry;
      r.mag_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.mag_.size();
    while (carry) {
      std::uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.sign_ = a.sign_ * b.sign_;
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw domain_error("BigInt: division by zero");
  int c = cmp_mag(a, b);
  if (c < 0) {
    q = BigInt();
    r = a;
    return;
  }
  // Single-limb divisor fast path.
  if (b.mag_.size() == 1) {
    std::uint64_t d = b.mag_[0];
    std::vector<std::uint32_t> qm(a.mag_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.mag_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a.mag_[i];
      qm[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    q = BigInt();
    q.mag_ = std::move(qm);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r = BigInt(static_cast<std::int64_t>(rem));
    if (a.sign_ < 0) r = -r;
    return;
  }
  // Knuth algorithm D.
  const std::size_t n = b.mag_.size();
  const std::size_t m = a.mag_.size() - n;
  unsigned shift = 0;
  while (((b.mag_[n - 1] << shift) & 0x80000000u) == 0) ++shift;
  std::vector<std::uint32_t> un(a.mag_.size() + 1, 0);
  std::vector<std::uint32_t> vn(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    vn[i] = (b.mag_[i] << shift) |
            (shift && i > 0 ? (b.mag_[i - 1] >> (32 - shift)) : 0u);
  }
  un[a.mag_.size()] =
      shift ? (a.mag_.back() >> (32 - shift)) : 0u;
  for (std::size_t i = a.mag_.size(); i-- > 0;) {
    un[i] = (a.mag_[i] << shift) |
            (shift && i > 0 ? (a.mag_[i - 1] >> (32 - shift)) : 0u);
  }
  std::vector<std::uint32_t> qm(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num =
        (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    // Multiply and subtract.
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                       static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                     static_cast<std::int64_t>(carry) - borrow;
    if (t < 0) {
      // Add back.
      t += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
        un[i + j] = static_cast<std::uint32_t>(s);
        c2 = s >> 32;
      }
      t += static_cast<std::int64_t>(c2);
      t &= 0xffffffff;
    }
    un[j + n] = static_cast<std::uint32_t>(t);
    qm[j] = static_cast<std::uint32_t>(qhat);
  }
  q = BigInt();
  q.mag_ = std::move(qm);
  q.sign_ = a.sign_ * b.sign_;
  q.trim();
  r = BigInt();
  r.mag_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r.mag_[i] = (un[i] >> shift) |
                (shift && i + 1 < n + 1 ? (un[i + 1] << (32 - shift)) : 0u);
  }
  r.sign_ = a.sign_;
  r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a, b);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::operator<<(unsigned bits) const {
  if (sign_ == 0 || bits == 0) return *this;
  unsigned limbs = bits / 32, rem = bits % 32;
  BigInt r;
  r.sign_ = sign_;
  r.mag_.assign(mag_.size() + limbs + 1, 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(mag_[i]) << rem;
    r.mag_[i + limbs] |= static_cast<std::uint32_t>(v);
    r.mag_[i + limbs + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  r.trim();
  return r;
}

BigInt BigInt::operator>>(unsigned bits) const {
  if (sign_ == 0) return *this;
  unsigned limbs = bits / 32, rem = bits % 32;
  if (limbs >= mag_.size()) return BigInt();
  BigInt r;
  r.sign_ = sign_;
  r.mag_.assign(mag_.size() - limbs, 0);
  for (std::size_t i = 0; i < r.mag_.size(); ++i) {
    std::uint64_t v = mag_[i + limbs] >> rem;
    if (rem && i + limbs + 1 < mag_.size())
      v |= static_cast<std::uint64_t>(mag_[i + limbs + 1]) << (32 - rem);
    r.mag_[i] = static_cast<std::uint32_t>(v);
  }
  r.trim();
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r.abs();
  }
  return a;
}

BigInt BigInt::isqrt(const BigInt& x) {
  if (x.is_negative()) throw domain_error("isqrt of negative value");
  if (x.is_zero()) return BigInt();
  unsigned bits = x.bit_length();
  BigInt g = BigInt(1) << ((bits + 1) / 2);
  for (;;) {
    BigInt next = (g + x / g) >> 1;
    if (next >= g) break;
    g = next;
  }
  // g is now floor(sqrt(x)) or one above; fix up.
  while (g * g > x) g = g - BigInt(1);
  return g;
}

unsigned BigInt::bit_length() const {
  if (sign_ == 0) return 0;
  unsigned top = 32;
  std::uint32_t hi = mag_.back();
  while ((hi & 0x80000000u) == 0) {
    hi <<= 1;
    --top;
  }
  return static_cast<unsigned>((mag_.size() - 1) * 32) + top;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  std::uint64_t m = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return m <= 0x7fffffffffffffffull;
  return m <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_int64() const {
  if (sign_ == 0) return 0;
  std::uint64_t m = mag_[0];
  if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
  return sign_ > 0 ? static_cast<std::int64_t>(m)
                   : -static_cast<std::int64_t>(m - 1) - 1;
}

double BigInt::to_double() const {
  if (sign_ == 0) return 0.0;
  unsigned bits = bit_length();
  if (bits <= 63) return static_cast<double>(to_int64());
  BigInt top = *this >> (bits - 62);
  return std::ldexp(static_cast<double>(top.to_int64()),
                    static_cast<int>(bits - 62));
}

BigInt BigInt::from_string(std::string_view s) {
  BigInt r;
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw domain_error("BigInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw domain_error("BigInt: bad digit in numeral");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  BigInt v = abs();
  std::string out;
  const BigInt chunk(1000000000);
  while (!v.is_zero()) {
    BigInt q, r;
    divmod(v, chunk, q, r);
    std::uint32_t digits = r.is_zero() ? 0u : r.mag_[0];
    for (int k = 0; k < 9; ++k) {
      out.push_back(static_cast<char>('0' + digits % 10));
      digits /= 10;
    }
    v = q;
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (sign_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t BigInt::hash() const {
  std::size_t h = static_cast<std::size_t>(sign_ + 1) * 0x9e3779b97f4a7c15ull;
  for (std::uint32_t limb : mag_) {
    h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace kgd
