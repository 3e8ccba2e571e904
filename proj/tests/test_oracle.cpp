#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kgd/catalog.hpp"
#include "kgd/oracle.hpp"
#include "kgd/rng.hpp"
#include "kgd/solver.hpp"

using namespace kgd;

namespace {

RealMat chsh() {
  RealMat m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = -1;
  return m;
}

ExactMat random_int_matrix(SplitRng& rng, int m1, int m2, int span = 9) {
  ExactMat m(m1, m2);
  for (auto& e : m.data())
    e = ExactScalar(static_cast<std::int64_t>(rng.next_u64() % (2 * span + 1)) -
                    span);
  return m;
}

}  // namespace

TEST_CASE("alternate_once rank one: sign updates with +1 fallback") {
  RealMat m = chsh();
  RealMat a(2, 1), b;
  a(0, 0) = 1;
  a(1, 0) = 1;
  double value = alternate_once(m, 1, a, b);
  CHECK(b(0, 0) == 1.0);  // column sum 2
  CHECK(b(1, 0) == 1.0);  // column sum 0 -> fallback +1
  CHECK(value == 2.0);
}

TEST_CASE("alternate_once rank two: identity fixes aligned vectors") {
  RealMat m(2, 2);
  m(0, 0) = 1;
  m(1, 1) = 1;
  RealMat a(2, 2), b;
  a(0, 0) = 1;
  a(1, 0) = 1;
  double value = alternate_once(m, 2, a, b);
  CHECK(value == doctest::Approx(2.0));
  CHECK(b(0, 0) == doctest::Approx(1.0));
  CHECK(b(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("alternation never decreases the objective") {
  SplitRng rng(41, 0);
  for (int trial = 0; trial < 30; ++trial) {
    int m1 = 3 + static_cast<int>(rng.next_u64() % 5);
    int m2 = 3 + static_cast<int>(rng.next_u64() % 5);
    RealMat m(m1, m2);
    for (auto& v : m.data()) v = rng.next_gaussian();
    for (int n : {1, 2, 3}) {
      RealMat a(m1, n), b;
      for (int i = 0; i < m1; ++i) {
        double norm2 = 0;
        for (int k = 0; k < n; ++k) {
          a(i, k) = rng.next_gaussian();
          norm2 += a(i, k) * a(i, k);
        }
        for (int k = 0; k < n; ++k) a(i, k) /= std::sqrt(norm2);
      }
      double prev = -1e300;
      for (int it = 0; it < 20; ++it) {
        double v = alternate_once(m, n, a, b);
        CHECK(v >= prev - 1e-9);
        prev = v;
      }
    }
  }
}

TEST_CASE("heuristic reaches the known optima") {
  OracleOptions o1;
  o1.n = 1;
  o1.restarts = 100;
  o1.seed = 5;
  CHECK(heuristic_sdp(chsh(), o1).value == doctest::Approx(2.0));

  OracleOptions o2 = o1;
  o2.n = 2;
  CHECK(heuristic_sdp(chsh(), o2).value ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));

  Configuration hex = generate("hexagon");
  ExactMat a = diagonal_modification(gram(hex, hex).entries,
                                     ExactScalar(Rational(2, 3)));
  OracleOptions o3;
  o3.n = 2;
  o3.restarts = 1000;
  o3.seed = 5;
  CHECK(heuristic_sdp(to_real(a), o3).value ==
        doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("strategy value matches the reported value") {
  SplitRng rng(43, 0);
  for (int trial = 0; trial < 20; ++trial) {
    RealMat m(4, 6);
    for (auto& v : m.data()) v = rng.next_gaussian();
    OracleOptions opts;
    opts.n = trial % 2 ? 1 : 2;
    opts.restarts = 50;
    opts.seed = trial;
    OracleResult r = heuristic_sdp(m, opts);
    double recomputed = opts.n == 1 ? vertex_value(m, *r.sign_strategy)
                                    : strategy_value(m, *r.unit_strategy);
    CHECK(std::fabs(recomputed - r.value) <= 1e-9 * (1 + std::fabs(r.value)));
  }
}

TEST_CASE("heuristic is reproducible and thread-count independent") {
  SplitRng rng(47, 0);
  RealMat m(8, 8);
  for (auto& v : m.data()) v = rng.next_gaussian();
  OracleOptions opts;
  opts.n = 1;
  opts.restarts = 200;
  opts.seed = 12345;
  OracleResult serial1 = heuristic_sdp(m, opts);
  OracleResult serial2 = heuristic_sdp(m, opts);
  CHECK(serial1.value == serial2.value);
  CHECK(*serial1.sign_strategy == *serial2.sign_strategy);
  opts.threads = 2;
  OracleResult parallel = heuristic_sdp(m, opts);
  CHECK(parallel.value == serial1.value);
  CHECK(*parallel.sign_strategy == *serial1.sign_strategy);
  opts.threads = 3;
  OracleResult parallel3 = heuristic_sdp(m, opts);
  CHECK(parallel3.value == serial1.value);
  CHECK(*parallel3.sign_strategy == *serial1.sign_strategy);
}

TEST_CASE("heuristic never exceeds the exact optimum") {
  SplitRng rng(53, 0);
  for (int trial = 0; trial < 25; ++trial) {
    int m1 = 6 + static_cast<int>(rng.next_u64() % 4);
    ExactMat m = random_int_matrix(rng, m1, m1);
    ExactSolveResult exact = sdp1_bruteforce(m);
    OracleOptions opts;
    opts.n = 1;
    opts.restarts = 60;
    opts.seed = trial;
    OracleResult h = heuristic_sdp(to_real(m), opts);
    CHECK(h.value <= exact.value.to_double() + 1e-9);
  }
}

TEST_CASE("lmo maximizes against the negated gradient") {
  SplitRng rng(59, 0);
  RealMat m(5, 7);
  for (auto& v : m.data()) v = rng.next_gaussian();
  OracleOptions opts;
  opts.n = 1;
  opts.restarts = 100;
  opts.seed = 999;
  OracleResult via_lmo = lmo(m * -1.0, opts);
  OracleResult direct = heuristic_sdp(m, opts);
  CHECK(via_lmo.value == direct.value);
  CHECK(*via_lmo.sign_strategy == *direct.sign_strategy);
  // zero gradient: any vertex, value 0
  RealMat zero(3, 3);
  OracleResult z = lmo(zero, opts);
  CHECK(z.value == 0.0);
}
