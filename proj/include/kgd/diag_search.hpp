#ifndef KGD_DIAG_SEARCH_HPP
#define KGD_DIAG_SEARCH_HPP

#include <optional>

#include "kgd/solver.hpp"

namespace kgd {

struct DiagSearchResult {
  ExactScalar lambda;
  ExactScalar ratio;        // <P - lambda I, P> / SDP_1[P - lambda I]
  ExactSolveResult solve;   // exact solve at lambda (when exact)
  bool exact = true;        // false: heuristic objective (instance too big)
};

/// Maximizes the ratio <P - t I, P> / SDP_1[P - t I] over t in [lo, hi].
/// The denominator is a finite maximum of functions affine in t, so the
/// ratio is monotone between its breakpoints and the optimum sits on a
/// breakpoint (or an endpoint); the search sweeps a grid, locates piece
/// changes exactly, and evaluates candidates in exact arithmetic.
/// Falls back to a heuristic objective (exact=false) when the instance is
/// too large for exact solving within opts.node_budget.
DiagSearchResult diagonal_modification_search(const ExactMat& p,
                                              const Rational& lo,
                                              const Rational& hi, int steps,
                                              const SolveOptions& opts = {});

/// Exact breakpoint of the piecewise-linear map t -> SDP_1[P - t I] closest
/// to the float estimate: solves at lam_est +- delta and intersects the two
/// optimal pieces.  Returns nullopt if both sides lie on one piece or the
/// intersection falls outside the window.
std::optional<ExactScalar> exact_lambda_near(const ExactMat& p,
                                             double lam_est, double delta,
                                             const SolveOptions& opts = {});

}  // namespace kgd

#endif  // KGD_DIAG_SEARCH_HPP
