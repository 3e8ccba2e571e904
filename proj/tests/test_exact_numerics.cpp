#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kgd/errors.hpp"
#include "kgd/json_io.hpp"
#include "kgd/rng.hpp"

using namespace kgd;

namespace {

ExactScalar random_scalar(SplitRng& rng) {
  static const std::int64_t rads[] = {1, 2, 3, 5, 6, 10};
  std::vector<std::pair<std::int64_t, Rational>> terms;
  int k = 1 + static_cast<int>(rng.next_u64() % 3);
  for (int i = 0; i < k; ++i) {
    std::int64_t rad = rads[rng.next_u64() % 6];
    std::int64_t num = static_cast<std::int64_t>(rng.next_u64() % 41) - 20;
    std::int64_t den = 1 + static_cast<std::int64_t>(rng.next_u64() % 12);
    terms.push_back({rad, Rational(num, den)});
  }
  return ExactScalar::canonicalize(terms);
}

}  // namespace

TEST_CASE("bigint arithmetic against 64-bit references") {
  SplitRng rng(123, 0);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = static_cast<std::int64_t>(rng.next_u64() % 2000001) - 1000000;
    std::int64_t b = static_cast<std::int64_t>(rng.next_u64() % 2000001) - 1000000;
    BigInt A(a), B(b);
    CHECK((A + B).to_int64() == a + b);
    CHECK((A - B).to_int64() == a - b);
    CHECK((A * B).to_int64() == a * b);
    if (b != 0) {
      CHECK((A / B).to_int64() == a / b);
      CHECK((A % B).to_int64() == a % b);
    }
    CHECK((A < B) == (a < b));
  }
}

TEST_CASE("bigint long multiplication, division, strings") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("987654321098765432109876543210");
  BigInt prod = a * b;
  CHECK(prod.to_string() ==
        "121932631137021795226185032733622923332237463801111263526900");
  CHECK(prod / a == b);
  CHECK(prod / b == a);
  CHECK((prod + BigInt(17)) % a == BigInt(17));
  CHECK(BigInt::gcd(a * BigInt(6), a * BigInt(4)) == a * BigInt(2));
}

TEST_CASE("bigint isqrt and bit ops") {
  for (std::int64_t v : {0ll, 1ll, 2ll, 3ll, 4ll, 120ll, 121ll, 122ll,
                         999999999999ll}) {
    BigInt r = BigInt::isqrt(BigInt(v));
    CHECK(r * r <= BigInt(v));
    CHECK((r + BigInt(1)) * (r + BigInt(1)) > BigInt(v));
  }
  BigInt big = BigInt::from_string("152415787532388367501905199875019052100");
  CHECK(BigInt::isqrt(big) == BigInt::from_string("12345678901234567890"));
  BigInt shifted = (BigInt(1) << 100) >> 100;
  CHECK(shifted == BigInt(1));
}

TEST_CASE("rational normalization and to_double") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
  Rational huge(BigInt::from_string("123456789123456789123456789"),
                BigInt::from_string("987654321987654321"));
  CHECK(huge.to_double() ==
        doctest::Approx(1.2499999886093749e8).epsilon(1e-12));
  CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("canonicalize reduces radicands and merges") {
  // sqrt(12) = 2 sqrt(3)
  CHECK(ExactScalar::canonicalize({{12, Rational(1)}}) ==
        ExactScalar::sqrt_term(3, Rational(2)));
  // duplicate radicands merge
  CHECK(ExactScalar::canonicalize({{5, Rational(1, 2)}, {5, Rational(1, 2)}}) ==
        ExactScalar::sqrt_term(5));
  // (1 + 3 sqrt(5)) / 6 ~ 1.28474
  ExactScalar v = ExactScalar::canonicalize(
      {{1, Rational(1, 6)}, {5, Rational(3, 6)}});
  CHECK(v.to_double() == doctest::Approx(1.2847).epsilon(1e-4));
  CHECK_THROWS_AS(ExactScalar::canonicalize({{0, Rational(1)}}), domain_error);
  CHECK_THROWS_AS(ExactScalar::canonicalize({{-3, Rational(1)}}),
                  domain_error);
}

TEST_CASE("canonicalize is idempotent") {
  SplitRng rng(7, 0);
  for (int i = 0; i < 200; ++i) {
    ExactScalar x = random_scalar(rng);
    CHECK(ExactScalar::canonicalize(
              {x.terms().begin(), x.terms().end()}) == x);
  }
}

TEST_CASE("to_float examples") {
  CHECK(ExactScalar(1).to_double() == 1.0);
  CHECK(ExactScalar::sqrt_term(5).to_double() ==
        doctest::Approx(2.2360679774997896).epsilon(1e-15));
  // (7 + 3 sqrt(5)) / 10 ~ 1.3708
  ExactScalar v = ExactScalar::canonicalize(
      {{1, Rational(7, 10)}, {5, Rational(3, 10)}});
  CHECK(v.to_double() == doctest::Approx(1.3708).epsilon(1e-4));
}

TEST_CASE("ring axioms hold exactly on random triples") {
  SplitRng rng(99, 1);
  for (int i = 0; i < 300; ++i) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng),
                c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("to_float respects addition to a rounding unit") {
  SplitRng rng(6, 7);
  for (int i = 0; i < 2000; ++i) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng);
    double lhs = (a + b).to_double();
    double rhs = a.to_double() + b.to_double();
    double mag = std::fabs(a.to_double()) + std::fabs(b.to_double()) + 1.0;
    CHECK(std::fabs(lhs - rhs) <= 4e-16 * mag);
  }
}

TEST_CASE("to_float respects multiplication within 1e-12") {
  SplitRng rng(5, 2);
  for (int i = 0; i < 10000; ++i) {
    ExactScalar x = random_scalar(rng), y = random_scalar(rng);
    double lhs = (x * y).to_double();
    double rhs = x.to_double() * y.to_double();
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * (1.0 + std::fabs(lhs)));
  }
}

TEST_CASE("exact division and sign") {
  ExactScalar phi = ExactScalar::canonicalize(
      {{1, Rational(1, 2)}, {5, Rational(1, 2)}});
  CHECK(ExactScalar(1) / phi == phi - ExactScalar(1));
  ExactScalar x = ExactScalar(3) + ExactScalar::sqrt_term(2) +
                  ExactScalar::sqrt_term(3, Rational(-2));
  CHECK((x / x) == ExactScalar(1));
  CHECK_THROWS_AS(x / ExactScalar(0), domain_error);
  // near-cancellation sign: 665857/470832 > sqrt(2) (continued fraction)
  ExactScalar tiny = ExactScalar(Rational(665857, 470832)) -
                     ExactScalar::sqrt_term(2);
  CHECK(tiny.sign() == 1);
  CHECK((-tiny).sign() == -1);
  CHECK((tiny - tiny).sign() == 0);
}

TEST_CASE("exact square roots") {
  CHECK(*ExactScalar(Rational(9, 4)).exact_sqrt() ==
        ExactScalar(Rational(3, 2)));
  CHECK(*ExactScalar(Rational(1, 2)).exact_sqrt() ==
        ExactScalar::sqrt_term(2, Rational(1, 2)));
  ExactScalar phi = ExactScalar::canonicalize(
      {{1, Rational(1, 2)}, {5, Rational(1, 2)}});
  CHECK(*(phi * phi).exact_sqrt() == phi);
  // (5 + sqrt(5))/2 is not a square in Q(sqrt(5))
  ExactScalar ns = ExactScalar::canonicalize(
      {{1, Rational(5, 2)}, {5, Rational(1, 2)}});
  CHECK(!ns.exact_sqrt().has_value());
  CHECK_THROWS_AS(ExactScalar(-1).exact_sqrt(), domain_error);
}

TEST_CASE("rationalize: convergents and exactness") {
  CHECK(rationalize(0.5, 10) == Rational(1, 2));
  CHECK(rationalize(0.333334, 100) == Rational(1, 3));
  // best approximation to pi with denominator <= 113, checked exhaustively
  Rational best = rationalize(M_PI, 113);
  Rational target = Rational::from_double_exact(M_PI);
  Rational best_err = (best - target).abs();
  for (std::int64_t q = 1; q <= 113; ++q) {
    std::int64_t p = std::llround(M_PI * static_cast<double>(q));
    Rational err = (Rational(p, q) - target).abs();
    CHECK(best_err <= err);
  }
  CHECK(best == Rational(355, 113));
  CHECK_THROWS_AS(rationalize(std::nan(""), 10), domain_error);
  CHECK_THROWS_AS(rationalize(1.0, 0), domain_error);
}

TEST_CASE("rationalize recovers representable fractions") {
  SplitRng rng(11, 3);
  for (int i = 0; i < 500; ++i) {
    std::int64_t q = 1 + static_cast<std::int64_t>(rng.next_u64() % 999);
    std::int64_t p = static_cast<std::int64_t>(rng.next_u64() % 100000) -
                     50000;
    double x = static_cast<double>(p) / static_cast<double>(q);
    CHECK(rationalize(x, q) == Rational(p, q));
  }
}

TEST_CASE("pi interval sandwich") {
  RationalInterval pi = RationalInterval::pi();
  CHECK(pi.lo().to_double() == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(pi.width() < Rational(1, 1000000000));
  CHECK(pi.contains(Rational(355, 113)) == false);
  CHECK(Rational(355, 113) > pi.hi());
  CHECK(Rational(311, 99) < pi.lo());
}

TEST_CASE("scalar json round trip is bit exact") {
  SplitRng rng(21, 4);
  for (int i = 0; i < 100; ++i) {
    ExactScalar x = random_scalar(rng);
    CHECK(exact_scalar_from_json(to_json(x)) == x);
  }
  // beyond-int64 coefficients serialize as strings and survive
  ExactScalar big(Rational(BigInt::from_string("123456789012345678901234567"),
                           BigInt(7)));
  CHECK(exact_scalar_from_json(to_json(big)) == big);
}
