#ifndef KGD_ORACLE_HPP
#define KGD_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "kgd/matrix.hpp"
#include "kgd/strategies.hpp"

namespace kgd {

struct OracleOptions {
  int n = 1;
  long restarts = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  // Per-restart alternation cap; hits are recorded, not fatal.
  long max_alternations = 10000;
  // Stop a restart when the objective improves by less than this (n >= 2;
  // rank-one restarts run to their exact fixpoint).
  double improvement_tol = 1e-12;
};

struct OracleResult {
  // Exactly one of the strategies is set, matching the queried rank.
  std::optional<SignStrategy> sign_strategy;
  std::optional<UnitStrategy> unit_strategy;
  double value = 0.0;
  long restarts_used = 0;
  std::uint64_t seed = 0;
  bool alternation_cap_hit = false;

  RealMat correlation() const;
};

/// One half-sweep pair of the alternating maximization: best response b to
/// the current a, then best response a' to that b.  Zero column/row sums map
/// to the fixed fallback (+1 for rank one, (1,0,...,0) otherwise).  Returns
/// the objective after the two updates, which never decreases.
double alternate_once(const RealMat& m, int n, RealMat& a, RealMat& b);

/// Best strategy over independently seeded random restarts; each restart
/// alternates to a fixpoint (rank one) or until the improvement drops below
/// 1e-12 (higher rank).  The result is a feasible strategy, hence a valid
/// lower bound on the rank-n optimum.  Deterministic in (m, options), and
/// independent of the thread count.
OracleResult heuristic_sdp(const RealMat& m, const OracleOptions& opts);

/// Linear minimisation oracle for the projection algorithm: returns the
/// strategy maximizing <-gradient, V>.  Same contract and determinism as
/// heuristic_sdp.
OracleResult lmo(const RealMat& gradient, const OracleOptions& opts);

}  // namespace kgd

#endif  // KGD_ORACLE_HPP
