#ifndef KGD_PROJECTION_HPP
#define KGD_PROJECTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kgd/configuration.hpp"
#include "kgd/group.hpp"
#include "kgd/matrix.hpp"
#include "kgd/solver.hpp"
#include "kgd/strategies.hpp"

namespace kgd {

struct ProjectionOptions {
  int n = 1;
  double tol = 1e-7;
  long max_iter = 200000;
  long lmo_restarts = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  const InvariantBasis* sym = nullptr;  // orbit-average vertices when set
  bool record_objective = false;
};

struct ActiveVertex {
  std::optional<SignStrategy> sign;  // rank-one vertices
  std::optional<UnitStrategy> unit;  // higher-rank extreme points
  RealMat avg;                       // (orbit-averaged) correlation matrix
  double weight = 0.0;
};

struct ActiveSet {
  std::vector<ActiveVertex> vertices;
  RealMat iterate;  // weighted combination of the vertices
  double weight_sum() const;
};

struct BpcgResult {
  RealMat x;
  ActiveSet active;
  double gap = 0.0;
  long iterations = 0;
  bool converged = false;
  std::vector<double> objective_history;  // only when record_objective
};

/// Blended pairwise conditional gradient projection: minimizes
/// (1/2)|X - target|^2 over the rank-n correlation body, alternating
/// weight-transfer steps between active vertices with global steps toward
/// the oracle vertex.  Stops when the Frank-Wolfe gap
/// <target - X, V - X> drops to tol or max_iter is hit (flagged).
BpcgResult bpcg_project(const RealMat& target, const ProjectionOptions& opts);

/// <M,P>/sdp_value, exact; the rescaled point P/v lies on the hyperplane
/// {<M, Z> = sdp_value}.  Throws on sdp_value <= 0.
ExactScalar v_update(const ExactMat& m, const ExactMat& p,
                     const ExactScalar& sdp_value);

struct IntegerizeResult {
  ExactMat matrix;           // integer entries
  double max_perturbation;   // max |scaled float - integer| / scale
  std::int64_t denominator;  // scale applied before rounding
};

/// Scales a float direction to a common-denominator integer matrix (small
/// denominators preferred); throws domain_error when no denominator within
/// the cap reproduces the direction to 1e-6 relative accuracy.
IntegerizeResult integerize_normal(const RealMat& m,
                                   std::int64_t denominator_cap = 1000000);

enum class FacetStatus { facet, separating, inside, degenerate };

struct FacetOptions {
  int n = 1;
  double tol = 1e-7;
  double tol_floor = 1e-9;
  long lmo_restarts = 1000;
  long max_rounds = 25;
  long max_iter = 200000;
  std::uint64_t seed = 1;
  int threads = 1;
  bool use_group = true;  // derive the group from the witnesses' isometries
  // Explicit group (user-supplied); overrides derivation.  Must leave the
  // correlation matrix invariant (domain_error otherwise).
  std::optional<SignedPermutationGroup> group;
  SolveOptions solver;
};

struct FacetResult {
  FacetStatus status = FacetStatus::separating;
  ExactMat normal;               // exact separating direction A
  ExactScalar offset;            // SDP_n[A]; exact for n = 1
  ExactScalar ratio;             // <A, P> / offset
  bool exact = false;            // offset certified optimal
  std::optional<ExactScalar> lambda;  // when A is a diagonal modification
  int codim = -1;
  int invariant_dim = 0;
  std::vector<double> v_history;  // multipliers of the projected point
  ActiveSet active;
  RealMat separating_float;       // last float direction
  long rounds = 0;
};

/// Iterative facet derivation: project v*P, read the gradient as a
/// separating hyperplane, move v*P onto that hyperplane, and repeat until
/// the active set spans a codimension-one flat of the symmetrised ambient
/// space; the normal is then reconstructed exactly and certified with an
/// exact solve (n = 1) or flagged heuristic (n >= 2).
FacetResult facet_loop(const CorrelationPoint& p, const FacetOptions& opts);

struct DecompositionCertificate {
  Rational v0;
  double epsilon = 0.0;  // certified upper bound on the residual
  Rational alpha;        // v0 / (1 + eps), rounded down
  std::size_t vertex_count = 0;
};

/// Converts a converged decomposition run (target = v0 * P) into a
/// certificate: active extreme points are rationalized onto the unit
/// circle, the residual of the rationalized combination is bounded with
/// certified rounding, and alpha = v0/(1+eps) then satisfies alpha*P inside
/// the rank-n body (the unit Frobenius ball sits inside).  When the run was
/// symmetrized, pass the same basis: each rationalized extreme point is
/// orbit-averaged, which keeps the combination inside the body (signed
/// permutations map extreme points to extreme points).  Throws domain_error
/// if the run did not converge or if claimed_epsilon is provided and the
/// recomputed residual exceeds it.
DecompositionCertificate decomposition_certificate(
    const ExactMat& p, const Rational& v0, const BpcgResult& run, int n,
    std::optional<double> claimed_epsilon = std::nullopt,
    const InvariantBasis* sym = nullptr);

}  // namespace kgd

#endif  // KGD_PROJECTION_HPP
