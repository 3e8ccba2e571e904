#ifndef KGD_STRATEGIES_HPP
#define KGD_STRATEGIES_HPP

#include <cstdint>
#include <vector>

#include "kgd/matrix.hpp"

namespace kgd {

/// Vertex of the rank-one correlation polytope: sign vectors on both sides.
/// The associated matrix is a b^T.
struct SignStrategy {
  std::vector<std::int8_t> a, b;  // entries exactly +-1

  bool operator==(const SignStrategy& o) const { return a == o.a && b == o.b; }
  /// Lexicographic order on (a, b); used for deterministic tie-breaks.
  bool operator<(const SignStrategy& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  RealMat outer() const;
};

/// Feasible point of the rank-n correlation body: one unit vector in R^n per
/// row index and per column index.  Stored as (m x n) coordinate blocks.
struct UnitStrategy {
  int n = 1;
  RealMat a, b;  // m1 x n and m2 x n, rows unit-norm

  RealMat correlation() const;  // a * b^T, shape m1 x m2
};

/// <M, a b^T> for a sign strategy; exact overload for exact matrices.
double vertex_value(const RealMat& m, const SignStrategy& s);
ExactScalar vertex_value(const ExactMat& m, const SignStrategy& s);

/// <M, A B^T> for a unit strategy.
double strategy_value(const RealMat& m, const UnitStrategy& s);

}  // namespace kgd

#endif  // KGD_STRATEGIES_HPP
