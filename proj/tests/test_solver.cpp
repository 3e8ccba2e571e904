#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kgd/catalog.hpp"
#include "kgd/errors.hpp"
#include "kgd/rng.hpp"
#include "kgd/solver.hpp"

using namespace kgd;

namespace {

ExactMat random_int_matrix(SplitRng& rng, int m1, int m2, int span = 9) {
  ExactMat m(m1, m2);
  for (auto& e : m.data())
    e = ExactScalar(static_cast<std::int64_t>(rng.next_u64() % (2 * span + 1)) -
                    span);
  return m;
}

ExactMat from_ints(int rows, int cols, std::vector<std::int64_t> vals) {
  ExactMat m(rows, cols);
  for (std::size_t i = 0; i < vals.size(); ++i)
    m.data()[i] = ExactScalar(vals[i]);
  return m;
}

}  // namespace

TEST_CASE("brute force basics") {
  CHECK(sdp1_bruteforce(from_ints(1, 1, {-7})).value == ExactScalar(7));
  CHECK(sdp1_bruteforce(from_ints(2, 2, {1, 1, 1, -1})).value ==
        ExactScalar(2));
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;
  CHECK(sdp1_bruteforce(p).value == ExactScalar(4));
  CHECK(sdp1_bruteforce(
            diagonal_modification(p, ExactScalar(Rational(2, 3))))
            .value == ExactScalar(2));
  ExactMat too_big(23, 2);
  CHECK_THROWS_AS(sdp1_bruteforce(too_big), resource_error);
}

TEST_CASE("cuboctahedron values") {
  Configuration c = generate("cuboctahedron");
  ExactMat p = gram(c, c).entries;
  CHECK(frob_dot(p, p) == ExactScalar(12));
  CHECK(sdp1_bruteforce(p).value == ExactScalar(10));
  ExactMat a = diagonal_modification(p, ExactScalar(Rational(2, 3)));
  CHECK(sdp1_branch_and_bound(a).value == ExactScalar(6));
}

TEST_CASE("column-wise absolute value identity") {
  // For fixed a, sum_y |sum_x M_xy a_x| equals the bilinear max over b.
  SplitRng rng(61, 0);
  for (int trial = 0; trial < 40; ++trial) {
    ExactMat m = random_int_matrix(rng, 4, 5);
    std::vector<std::int8_t> a(4);
    for (auto& v : a) v = static_cast<std::int8_t>(rng.next_sign());
    ExactScalar abs_form;
    for (int y = 0; y < 5; ++y) {
      ExactScalar col;
      for (int x = 0; x < 4; ++x)
        col += a[x] > 0 ? m(x, y) : -m(x, y);
      abs_form += col.abs();
    }
    ExactScalar best(-1000000);
    for (int mask = 0; mask < 32; ++mask) {
      SignStrategy s;
      s.a = a;
      for (int y = 0; y < 5; ++y)
        s.b.push_back(mask & (1 << y) ? std::int8_t(1) : std::int8_t(-1));
      ExactScalar v = vertex_value(m, s);
      if (v > best) best = v;
    }
    CHECK(abs_form == best);
  }
}

TEST_CASE("branch and bound equals brute force on random instances") {
  SplitRng rng(67, 0);
  for (int trial = 0; trial < 60; ++trial) {
    int m1 = 5 + static_cast<int>(rng.next_u64() % 6);
    int m2 = 5 + static_cast<int>(rng.next_u64() % 10);
    ExactMat m = random_int_matrix(rng, m1, m2);
    ExactSolveResult brute = sdp1_bruteforce(m);
    ExactSolveResult bnb = sdp1_branch_and_bound(m);
    CHECK(bnb.optimal);
    CHECK(bnb.value == brute.value);
  }
}

TEST_CASE("branch and bound handles radical matrices exactly") {
  Configuration ico = generate("icosahedron");
  ExactMat p = gram(ico, ico).entries;
  // SDP_1[P] = 6 + 2 sqrt(5)
  ExactScalar expected =
      ExactScalar(6) + ExactScalar::sqrt_term(5, Rational(2));
  CHECK(sdp1_bruteforce(p).value == expected);
  CHECK(sdp1_branch_and_bound(p).value == expected);
  ExactScalar lam = (ExactScalar(15) - ExactScalar::sqrt_term(5)) /
                    ExactScalar(15);
  ExactSolveResult facet = sdp1_branch_and_bound(
      diagonal_modification(p, lam));
  CHECK(facet.value == ExactScalar::sqrt_term(5, Rational(12, 5)));
}

TEST_CASE("warm start changes nodes, not the value") {
  SplitRng rng(71, 0);
  ExactMat m = random_int_matrix(rng, 10, 10);
  ExactSolveResult cold = sdp1_branch_and_bound(m);
  SolveOptions warm_opts;
  warm_opts.warm_start = cold.strategy;
  ExactSolveResult warm = sdp1_branch_and_bound(m, warm_opts);
  CHECK(warm.value == cold.value);
  CHECK(warm.nodes_visited <= cold.nodes_visited);
  // and a deliberately bad warm start still returns the optimum
  SolveOptions bad_opts;
  SignStrategy bad;
  bad.a.assign(10, 1);
  bad.b.assign(10, 1);
  bad_opts.warm_start = bad;
  CHECK(sdp1_branch_and_bound(m, bad_opts).value == cold.value);
}

TEST_CASE("node budget produces an incumbent with the flag cleared") {
  SplitRng rng(73, 0);
  ExactMat m = random_int_matrix(rng, 14, 14);
  SolveOptions opts;
  opts.node_budget = 20;
  ExactSolveResult r = sdp1_branch_and_bound(m, opts);
  CHECK(!r.optimal);
  ExactSolveResult full = sdp1_branch_and_bound(m);
  CHECK(full.optimal);
  CHECK(r.value <= full.value);
}

TEST_CASE("rectangular path branches on the smaller side") {
  SplitRng rng(79, 0);
  // 3 x 1000: exhaustive over 4 sign prefixes via the transpose
  ExactMat wide = random_int_matrix(rng, 3, 1000, 4);
  ExactSolveResult r = sdp1_rectangular(wide);
  CHECK(r.optimal);
  ExactSolveResult brute = sdp1_bruteforce(wide);
  CHECK(r.value == brute.value);
  // transpose invariance
  ExactSolveResult rt = sdp1_rectangular(wide.transposed());
  CHECK(rt.value == r.value);
  // branch cap
  SolveOptions cap;
  cap.branch_cap = 10;
  ExactMat big(12, 40);
  CHECK_THROWS_AS(sdp1_rectangular(big, cap), resource_error);
}

TEST_CASE("hexagon facet embedded rectangularly") {
  Configuration hex = generate("hexagon");
  ExactMat a = diagonal_modification(gram(hex, hex).entries,
                                     ExactScalar(Rational(2, 3)));
  CHECK(sdp1_rectangular(a).value == ExactScalar(2));
}

TEST_CASE("node bound dominates every completion") {
  SplitRng rng(83, 0);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMat m = random_int_matrix(rng, 7, 6);
    int depth = static_cast<int>(rng.next_u64() % 5);
    std::vector<std::int8_t> prefix;
    for (int i = 0; i < depth; ++i)
      prefix.push_back(static_cast<std::int8_t>(rng.next_sign()));
    ExactScalar bound = completion_bound(m, prefix);
    // exhaustive over completions of the remaining rows
    int rest = 7 - depth;
    ExactScalar best(-1000000);
    for (int mask = 0; mask < (1 << rest); ++mask) {
      std::vector<std::int8_t> a = prefix;
      for (int i = 0; i < rest; ++i)
        a.push_back(mask & (1 << i) ? std::int8_t(1) : std::int8_t(-1));
      ExactScalar total;
      for (int y = 0; y < 6; ++y) {
        ExactScalar col;
        for (int x = 0; x < 7; ++x) col += a[x] > 0 ? m(x, y) : -m(x, y);
        total += col.abs();
      }
      if (total > best) best = total;
    }
    CHECK(bound >= best);
  }
}

TEST_CASE("dodecahedron gram ratio 25(7-3sqrt5)/6") {
  Configuration dod = generate("dodecahedron");
  ExactMat p = gram(dod, dod).entries;
  CHECK(frob_dot(p, p) == ExactScalar(Rational(100, 3)));
  ExactSolveResult solve = sdp1_bruteforce(p);
  // SDP_1[P] = 14 + 6 sqrt(5)
  CHECK(solve.value == ExactScalar::canonicalize(
                           {{1, Rational(14)}, {5, Rational(6)}}));
  ExactScalar ratio = frob_dot(p, p) / solve.value;
  CHECK(ratio == ExactScalar::canonicalize(
                     {{1, Rational(175, 6)}, {5, Rational(-75, 6)}}));
  CHECK(ratio.to_double() == doctest::Approx(1.2158).epsilon(1e-4));
}

TEST_CASE("icosidodecahedron gram ratio 75(31-12sqrt5)/241") {
  Configuration id = generate("icosidodecahedron");
  ExactMat p = gram(id, id).entries;
  ExactSolveResult solve = sdp1_branch_and_bound(p);
  ExactScalar ratio = frob_dot(p, p) / solve.value;
  ExactScalar expected = ExactScalar::canonicalize(
      {{1, Rational(75 * 31, 241)}, {5, Rational(-75 * 12, 241)}});
  CHECK(ratio == expected);
  CHECK(ratio.to_double() == doctest::Approx(1.2968).epsilon(1e-4));
}

TEST_CASE("E7+ETF cross entries use radicand 3") {
  Configuration c = generate("E7+ETF");
  ExactMat p = gram(c, c).entries;
  // an E7 line against a frame line: +-1/sqrt(3) or 0
  bool saw_rad3 = false;
  for (int x = 0; x < 63; ++x)
    for (int y = 63; y < 91; ++y) {
      const ExactScalar& e = p(x, y);
      if (e.is_zero()) continue;
      auto rads = e.radicands();
      REQUIRE(rads.size() == 1);
      CHECK(rads[0] == 3);
      saw_rad3 = true;
    }
  CHECK(saw_rad3);
}

TEST_CASE("28-line tight frame row solves exactly" * doctest::timeout(120)) {
  // The published diagonal modification is printed as 39/24; lowest terms.
  CHECK(Rational(39, 24) == Rational(13, 8));
  Configuration etf = generate("ETF28");
  ExactMat p = gram(etf, etf).entries;
  CHECK(frob_dot(p, p) == ExactScalar(112));
  SolveOptions opts;
  opts.node_budget = 1ull << 31;
  opts.checkpoint_interval = 0;
  ExactSolveResult rp = sdp1_branch_and_bound(p, opts);
  CHECK(rp.value == ExactScalar(100));  // ratio 112/100 = 28/25
  ExactMat a = diagonal_modification(p, ExactScalar(Rational(13, 8)));
  ExactSolveResult ra = sdp1_branch_and_bound(a, opts);
  CHECK(ra.value == ExactScalar(Rational(109, 2)));
  CHECK(frob_dot(a, p) / ra.value == ExactScalar(Rational(133, 109)));
}

TEST_CASE("rounded float solve matches the exact integer solve") {
  SplitRng rng(89, 0);
  ExactMat m = random_int_matrix(rng, 8, 8, 5);
  ExactSolveResult exact = sdp1_bruteforce(m);
  ExactSolveResult rounded = sdp1_rounded(to_real(m));
  CHECK(std::fabs(rounded.value.to_double() - exact.value.to_double()) <=
        1e-8 * (1 + exact.value.to_double()));
}
