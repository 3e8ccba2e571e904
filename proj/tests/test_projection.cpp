#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kgd/catalog.hpp"
#include "kgd/diag_search.hpp"
#include "kgd/errors.hpp"
#include "kgd/projection.hpp"

using namespace kgd;

TEST_CASE("projection of a vertex is the vertex") {
  RealMat target(2, 2);
  target(0, 0) = 1;
  target(0, 1) = -1;
  target(1, 0) = 1;
  target(1, 1) = -1;  // outer product of (1,1) and (1,-1)
  ProjectionOptions opts;
  opts.tol = 1e-9;
  opts.lmo_restarts = 50;
  opts.seed = 3;
  BpcgResult r = bpcg_project(target, opts);
  CHECK(r.converged);
  CHECK(std::sqrt(frob_norm2(r.x - target)) <= 1e-6);
}

TEST_CASE("projection of the zero matrix collapses to the origin") {
  RealMat target(3, 3);
  ProjectionOptions opts;
  opts.tol = 1e-8;
  opts.lmo_restarts = 30;
  opts.seed = 4;
  BpcgResult r = bpcg_project(target, opts);
  CHECK(frob_norm2(r.x) <= 1e-5);
}

TEST_CASE("objective decreases monotonically and the gap is nonnegative") {
  Configuration hex = generate("hexagon");
  RealMat target = to_real(gram(hex, hex).entries);
  ProjectionOptions opts;
  opts.tol = 1e-9;
  opts.lmo_restarts = 100;
  opts.seed = 5;
  opts.record_objective = true;
  BpcgResult r = bpcg_project(target, opts);
  CHECK(r.converged);
  CHECK(r.gap >= -1e-12);
  for (std::size_t i = 1; i < r.objective_history.size(); ++i)
    CHECK(r.objective_history[i] <=
          r.objective_history[i - 1] + 1e-12);
  // hexagon gram lies outside the rank-one polytope
  CHECK(std::sqrt(frob_norm2(r.x - target)) > 1e-3);
}

TEST_CASE("v_update examples") {
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;
  ExactMat a = diagonal_modification(p, ExactScalar(Rational(2, 3)));
  // <A, P> = 5/2, SDP_1[A] = 2 -> ratio 5/4
  CHECK(v_update(a, p, ExactScalar(2)) == ExactScalar(Rational(5, 4)));
  // point on the hyperplane: ratio 1
  CHECK(v_update(p, p, frob_dot(p, p)) == ExactScalar(1));
  CHECK_THROWS_AS(v_update(a, p, ExactScalar(0)), domain_error);
  CHECK_THROWS_AS(v_update(a, p, ExactScalar(-1)), domain_error);
}

TEST_CASE("integerize_normal") {
  RealMat thirds(2, 2);
  thirds(0, 0) = 1.0 / 3;
  thirds(0, 1) = -1.0 / 3;
  thirds(1, 0) = 1.0 / 3;
  thirds(1, 1) = 1.0 / 3;
  IntegerizeResult r = integerize_normal(thirds);
  CHECK(r.matrix(0, 0) == ExactScalar(1));
  CHECK(r.matrix(0, 1) == ExactScalar(-1));
  CHECK(r.max_perturbation <= 1e-9);
  // already integer stays put (up to overall scale 1)
  RealMat ints(2, 2);
  ints(0, 0) = 2;
  ints(0, 1) = -3;
  ints(1, 0) = 0;
  ints(1, 1) = 1;
  IntegerizeResult r2 = integerize_normal(ints);
  CHECK(r2.matrix(0, 0) * ExactScalar(-3) == r2.matrix(0, 1) * ExactScalar(2));
  // irrational direction fails
  RealMat bad(1, 2);
  bad(0, 0) = 1.0;
  bad(0, 1) = std::sqrt(2.0);
  CHECK_THROWS_AS(integerize_normal(bad, 100), domain_error);
}

TEST_CASE("facet loop on the hexagon recovers the diagonal modification") {
  Configuration hex = generate("hexagon");
  CorrelationPoint p = gram(hex, hex);
  FacetOptions opts;
  opts.seed = 9;
  opts.lmo_restarts = 200;
  FacetResult r = facet_loop(p, opts);
  REQUIRE(r.status == FacetStatus::facet);
  CHECK(r.exact);
  CHECK(r.ratio == ExactScalar(Rational(5, 4)));
  REQUIRE(r.lambda.has_value());
  CHECK(*r.lambda == ExactScalar(Rational(2, 3)));
  CHECK(r.codim == 1);
  // v history strictly decreasing while separating
  for (std::size_t i = 1; i < r.v_history.size(); ++i)
    CHECK(r.v_history[i] < r.v_history[i - 1]);
  // ratio invariant under positive rescaling of the facet
  ExactScalar seven(7);
  ExactMat scaled = r.normal * seven;
  ExactSolveResult s = sdp1_branch_and_bound(scaled);
  CHECK(frob_dot(scaled, p.entries) / s.value == r.ratio);
}

TEST_CASE("facet loop flags interior points") {
  // 0.5 * hexagon-gram is inside the rank-one polytope
  Configuration hex = generate("hexagon");
  CorrelationPoint p = gram(hex, hex);
  for (auto& e : p.entries.data()) e = e * ExactScalar(Rational(2, 5));
  FacetOptions opts;
  opts.seed = 10;
  opts.lmo_restarts = 150;
  FacetResult r = facet_loop(p, opts);
  CHECK(r.status == FacetStatus::inside);
}

TEST_CASE("diagonal modification search finds the hexagon breakpoint") {
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;
  DiagSearchResult r = diagonal_modification_search(p, Rational(1, 4),
                                                    Rational(9, 8), 8);
  CHECK(r.exact);
  CHECK(r.lambda == ExactScalar(Rational(2, 3)));
  CHECK(r.ratio == ExactScalar(Rational(5, 4)));
  auto near = exact_lambda_near(p, 0.6667, 1e-3);
  REQUIRE(near.has_value());
  CHECK(*near == ExactScalar(Rational(2, 3)));
}

TEST_CASE("rank-two facet search returns a flagged separating bound") {
  Configuration ico = generate("icosahedron");
  CorrelationPoint p = gram(ico, ico);
  FacetOptions opts;
  opts.n = 2;
  opts.seed = 5;
  opts.lmo_restarts = 40;
  opts.tol = 1e-6;
  opts.max_rounds = 6;
  opts.max_iter = 4000;
  FacetResult r = facet_loop(p, opts);
  CHECK(r.status != FacetStatus::inside);
  CHECK(!r.exact);  // rank-two offsets are heuristic, never upgraded
  REQUIRE(r.offset.sign() > 0);
  // valid putative lower bound on the rank-3-vs-rank-2 ratio: above one,
  // and the direction fits the diagonal-modification family
  CHECK(r.ratio.to_double() > 1.0);
  CHECK(r.lambda.has_value());
  CHECK(r.lambda->to_double() > 0.5);
  CHECK(r.lambda->to_double() < 1.5);
}

TEST_CASE("decomposition certificate edge cases") {
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;
  BpcgResult fake;
  fake.converged = false;
  CHECK_THROWS_AS(
      decomposition_certificate(p, Rational(1, 2), fake, 1),
      domain_error);
  // exact decomposition: P itself as 1.0 * P needs vertices; craft the
  // trivial case target = vertex with weight one and v0 = 1
  ExactMat vert(2, 2);
  vert(0, 0) = ExactScalar(1);
  vert(0, 1) = ExactScalar(1);
  vert(1, 0) = ExactScalar(1);
  vert(1, 1) = ExactScalar(1);
  BpcgResult run;
  run.converged = true;
  ActiveVertex v;
  SignStrategy s;
  s.a = {1, 1};
  s.b = {1, 1};
  v.sign = s;
  v.avg = s.outer();
  v.weight = 1.0;
  run.active.vertices.push_back(v);
  run.active.iterate = v.avg;
  run.x = v.avg;
  DecompositionCertificate cert =
      decomposition_certificate(vert, Rational(1), run, 1);
  CHECK(cert.epsilon <= 1e-8);
  CHECK(cert.alpha.to_double() == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(cert.vertex_count == 1);
  // claimed epsilon below the recomputed residual is rejected
  CHECK_THROWS_AS(
      decomposition_certificate(vert, Rational(1, 2), run, 1, 1e-12),
      domain_error);
}
