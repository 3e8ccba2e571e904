#ifndef KGD_SOLVER_HPP
#define KGD_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "kgd/matrix.hpp"
#include "kgd/strategies.hpp"

namespace kgd {

struct ExactSolveResult {
  ExactScalar value;
  SignStrategy strategy;
  std::uint64_t nodes_visited = 0;
  bool optimal = true;  // false: node budget exhausted, value is incumbent

  double value_double() const { return value.to_double(); }
};

struct SolveOptions {
  std::optional<SignStrategy> warm_start;
  std::uint64_t node_budget = UINT64_C(1) << 62;
  int branch_cap = 34;  // rectangular path: max rows on the branched side
  // Long solves report the incumbent every this many nodes (0 disables).
  std::uint64_t checkpoint_interval = 10000000;
};

/// Exhaustive maximum of sum_y |sum_x M_xy a_x| over sign vectors with
/// a_1 = +1 (global flip symmetry), by Gray-code enumeration with exact
/// arithmetic.  Requires m1 <= 22 (resource_error beyond).
ExactSolveResult sdp1_bruteforce(const ExactMat& m);

/// Depth-first branch and bound on the a-signs with the column bound
/// sum_y (|partial column sum| + sum_{x unfixed} |M_xy|); prunes against the
/// incumbent (warm start or a short heuristic run).  Exact optimum whenever
/// the budget is not exhausted.
ExactSolveResult sdp1_branch_and_bound(const ExactMat& m,
                                       const SolveOptions& opts = {});

/// Branch-and-bound that always branches on the smaller side (transposing
/// if needed); intended for wide instances.  Throws resource_error when the
/// smaller side exceeds opts.branch_cap.
ExactSolveResult sdp1_rectangular(const ExactMat& m,
                                  const SolveOptions& opts = {});

/// Exact solve of a floating-point matrix after scaling to integers at 2^44
/// relative precision; the returned value is the exact optimum of the
/// rounded matrix, reported in the original scale.
ExactSolveResult sdp1_rounded(const RealMat& m, const SolveOptions& opts = {});

/// Node bound used by the solver, exposed for soundness checks: given the
/// fixed prefix (signs for rows [0, depth) in branch order), an upper bound
/// on the best completion value.
ExactScalar completion_bound(const ExactMat& m,
                             const std::vector<std::int8_t>& prefix);

}  // namespace kgd

#endif  // KGD_SOLVER_HPP
