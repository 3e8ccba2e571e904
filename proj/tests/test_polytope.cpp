#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kgd/catalog.hpp"
#include "kgd/errors.hpp"
#include "kgd/group.hpp"
#include "kgd/json_io.hpp"
#include "kgd/rng.hpp"

using namespace kgd;

namespace {

SignStrategy make_strategy(std::vector<int> a, std::vector<int> b) {
  SignStrategy s;
  for (int v : a) s.a.push_back(static_cast<std::int8_t>(v));
  for (int v : b) s.b.push_back(static_cast<std::int8_t>(v));
  return s;
}

SignedPermutationGroup hexagon_rotation_only() {
  // Cyclic rotation of the three hexagon lines with a sign twist on the
  // wraparound: 1 -> 2, 2 -> 3, 3 -> -1.
  SignedPermutationGroup g;
  g.m1 = g.m2 = 3;
  SignedPerm sigma;
  sigma.img = {2, 3, -1};
  g.generators.push_back({sigma, sigma});
  return g;
}

}  // namespace

TEST_CASE("vertex_value examples") {
  ExactMat m(2, 2);
  m(0, 0) = ExactScalar(1);
  m(0, 1) = ExactScalar(1);
  m(1, 0) = ExactScalar(1);
  m(1, 1) = ExactScalar(-1);
  CHECK(vertex_value(m, make_strategy({1, 1}, {1, 1})) == ExactScalar(2));

  Configuration hex = generate("hexagon");
  CorrelationPoint p = gram(hex, hex);
  CHECK(vertex_value(p.entries, make_strategy({1, 1, 1}, {1, 1, 1})) ==
        ExactScalar(4));
  // global sign flip leaves the value unchanged
  CHECK(vertex_value(p.entries, make_strategy({-1, -1, -1}, {-1, -1, -1})) ==
        ExactScalar(4));
  CHECK_THROWS_AS(vertex_value(m, make_strategy({1}, {1, 1})), domain_error);
}

TEST_CASE("vertex_value is linear in the matrix") {
  SplitRng rng(3, 0);
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;
  ExactMat q = diagonal_modification(p, ExactScalar(Rational(2, 3)));
  for (int t = 0; t < 50; ++t) {
    SignStrategy s;
    for (int i = 0; i < 3; ++i) s.a.push_back(rng.next_sign());
    for (int i = 0; i < 3; ++i) s.b.push_back(rng.next_sign());
    ExactScalar alpha(Rational(static_cast<std::int64_t>(rng.next_u64() % 7) - 3,
                               1 + static_cast<std::int64_t>(rng.next_u64() % 5)));
    ExactScalar beta(Rational(static_cast<std::int64_t>(rng.next_u64() % 7) - 3,
                              1 + static_cast<std::int64_t>(rng.next_u64() % 5)));
    ExactMat combo = p * alpha + q * beta;
    CHECK(vertex_value(combo, s) ==
          alpha * vertex_value(p, s) + beta * vertex_value(q, s));
  }
}

TEST_CASE("group closure orders") {
  // single identity generator
  SignedPermutationGroup id;
  id.m1 = id.m2 = 3;
  id.generators.push_back(
      {SignedPerm::identity(3), SignedPerm::identity(3)});
  CHECK(id.order() == 1);

  // hexagon rotation with sign twist: order 6
  CHECK(hexagon_rotation_only().order() == 6);

  // 24-cell symmetries: the closure divides 1152 (the full group order)
  Configuration c = generate("24cell");
  CorrelationPoint p = gram(c, c);
  SignedPermutationGroup g = derive_group(p);
  std::size_t order = g.order();
  CHECK(order > 1);
  CHECK(1152 % order == 0);

  // closure cap trips a resource error
  CHECK_THROWS_AS(g.closure(10), resource_error);
}

TEST_CASE("symmetrize: identity, idempotence, invariance of the hexagon") {
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;

  SignedPermutationGroup id;
  id.m1 = id.m2 = 3;
  id.generators.push_back({SignedPerm::identity(3), SignedPerm::identity(3)});
  CHECK(symmetrize(p, id.closure()) == p);

  SignedPermutationGroup rot = hexagon_rotation_only();
  auto elements = rot.closure();
  ExactMat s1 = symmetrize(p, elements);
  CHECK(s1 == p);  // the gram matrix is already invariant
  // idempotence on an arbitrary matrix
  ExactMat q(3, 3);
  q(0, 1) = ExactScalar(1);
  q(2, 0) = ExactScalar(Rational(1, 3));
  ExactMat once = symmetrize(q, elements);
  CHECK(symmetrize(once, elements) == once);
  // projection preserves pairings with invariant matrices
  CHECK(frob_dot(once, p) == frob_dot(q, p));
}

TEST_CASE("orbit projection agrees with element averaging") {
  SignedPermutationGroup rot = hexagon_rotation_only();
  InvariantBasis basis(rot);
  auto elements = rot.closure();
  SplitRng rng(17, 0);
  for (int t = 0; t < 20; ++t) {
    ExactMat q(3, 3);
    for (auto& e : q.data())
      e = ExactScalar(Rational(static_cast<std::int64_t>(rng.next_u64() % 9) - 4,
                               1 + static_cast<std::int64_t>(rng.next_u64() % 3)));
    CHECK(basis.project(q) == symmetrize(q, elements));
  }
}

TEST_CASE("invariant basis dimensions") {
  // trivial group: every cell is its own orbit
  SignedPermutationGroup id;
  id.m1 = 2;
  id.m2 = 3;
  id.generators.push_back({SignedPerm::identity(2), SignedPerm::identity(3)});
  InvariantBasis triv(id);
  CHECK(triv.dim() == 6);
  CHECK(triv.orbit_count() == 6);

  // full symmetric group on rows+columns of a square: diagonal vs off-diagonal
  SignedPermutationGroup sym;
  sym.m1 = sym.m2 = 4;
  SignedPerm cyc, swp;
  cyc.img = {2, 3, 4, 1};
  swp.img = {2, 1, 3, 4};
  sym.generators.push_back({cyc, cyc});
  sym.generators.push_back({swp, swp});
  InvariantBasis two(sym);
  CHECK(two.dim() == 2);

  // hexagon rotation group: at most 3 free orbits on the 3x3 cells
  InvariantBasis hexb(hexagon_rotation_only());
  CHECK(hexb.dim() <= 3);
}

TEST_CASE("group elements map strategies preserving invariant objectives") {
  Configuration hex = generate("hexagon");
  ExactMat p = gram(hex, hex).entries;
  SignedPermutationGroup rot = hexagon_rotation_only();
  auto elements = rot.closure();
  SplitRng rng(23, 0);
  for (const auto& g : elements) {
    for (int t = 0; t < 8; ++t) {
      SignStrategy s;
      for (int i = 0; i < 3; ++i) s.a.push_back(rng.next_sign());
      for (int i = 0; i < 3; ++i) s.b.push_back(rng.next_sign());
      SignStrategy gs = apply_element(g, s);
      for (auto v : gs.a) CHECK((v == 1 || v == -1));
      CHECK(vertex_value(p, gs) == vertex_value(p, s));
    }
  }
}

TEST_CASE("derived catalog groups leave the gram matrix invariant") {
  for (const char* name : {"hexagon", "cuboctahedron", "icosahedron",
                           "dodecahedron", "icosidodecahedron", "24cell",
                           "D5", "D8", "E6", "E7", "E8", "ETF28",
                           "E7+ETF"}) {
    Configuration c = generate(name);
    CorrelationPoint p = gram(c, c);
    SignedPermutationGroup g = derive_group(p);
    CHECK(!g.trivial());
    CHECK(is_invariant(p.entries, g));
  }
}

TEST_CASE("group json round trip") {
  SignedPermutationGroup g = hexagon_rotation_only();
  json j = to_json(g);
  SignedPermutationGroup back = group_from_json(j);
  CHECK(back.m1 == 3);
  CHECK(back.generators.size() == 1);
  CHECK(back.generators[0].row == g.generators[0].row);
  // malformed: image out of range
  json bad = j;
  bad["generators"][0]["rows"][0] = 9;
  CHECK_THROWS_AS(group_from_json(bad), domain_error);
}
