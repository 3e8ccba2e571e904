#ifndef KGD_HULL_HPP
#define KGD_HULL_HPP

#include <optional>
#include <vector>

#include "kgd/configuration.hpp"
#include "kgd/matrix.hpp"

namespace kgd {

/// Inradius data of the centrally-symmetrized vertex set {+-a_x}: eta is the
/// largest radius such that eta * S^{d-1} fits inside the hull.
struct ShrinkingFactor {
  double eta = 0.0;        // certified from below
  double eta2 = 0.0;       // eta^2, certified from below
  std::optional<ExactScalar> eta2_exact;  // exact value when computable
  // Supporting facet normals scaled so the facet hyperplane is <n, x> = 1;
  // every hull point satisfies <n, x> <= 1, and eta = min 1/|n|.
  std::vector<std::vector<double>> facet_normals;
  std::vector<double> witness_normal;  // the minimizing facet
};

/// Brute-force facet enumeration over all d-subsets of {+-a_x}; requires
/// 2 <= d <= 4 and m <= 500 and a full-dimensional point set (domain_error
/// otherwise).  Exact arithmetic is used when the configuration is exact and
/// small enough, certified floating point otherwise.
ShrinkingFactor shrinking_factor(const Configuration& conf);

/// One refinement round: vertices plus normalized centroids of every hull
/// facet (triangles for the solids this pipeline uses).  Float-backed.
Configuration refine_by_facet_centers(const Configuration& conf);

}  // namespace kgd

#endif  // KGD_HULL_HPP
