#ifndef KGD_CONFIGURATION_HPP
#define KGD_CONFIGURATION_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "kgd/matrix.hpp"

namespace kgd {

/// A line packing: m lines through the origin of R^d, one representative
/// vector per line.  Representatives are stored unnormalized together with
/// their exact squared norms, so that Gram entries <u/|u|, v/|v|> can be
/// formed exactly (division by sqrt(|u|^2 |v|^2) stays inside the quadratic
/// field for every catalog configuration).
///
/// Some catalog packings are presented in an isometric embedding ambient()
/// one higher than their intrinsic dimension dim (the E6/E7 families live in
/// a hyperplane of R^8); only inner products ever flow downstream, so the
/// embedding is invisible to the rest of the pipeline.
struct Configuration {
  std::string name;
  int dim = 0;      // intrinsic dimension d (lines span a d-dim subspace)
  ExactMat vectors; // m x ambient, raw representatives
  std::vector<ExactScalar> norm2;  // squared norm per row
  bool float_backed = false;       // parsed from decimal data; norms ~1
  std::set<std::string> tags;      // kissing, etf, platonic
  // Symmetry hint: exact ambient x ambient isometries mapping the line set
  // to itself.  Line-level signed permutations are derived on demand.
  std::vector<ExactMat> isometries;

  int m() const { return vectors.rows(); }
  int ambient() const { return vectors.cols(); }

  /// Normalized rows in floating point.
  RealMat unit_rows() const;

  /// Exact normalized inner product between rows x and y.
  ExactScalar line_dot(int x, int y) const;
  ExactScalar line_dot(int x, const Configuration& other, int y) const;

  /// Checks row norms (exact for exact configurations, 1e-12 for
  /// float-backed) and pairwise line distinctness; throws on violation.
  void validate() const;
};

/// Inner-product matrix between two packings: entries <a_x, b_y>, a point of
/// the rank-d correlation body when both sides are unit lines in R^d.
struct CorrelationPoint {
  ExactMat entries;  // m1 x m2
  Configuration witness_a, witness_b;

  int m1() const { return entries.rows(); }
  int m2() const { return entries.cols(); }
  bool symmetric_witness() const { return witness_a.name == witness_b.name; }
};

/// Exact cross-Gram of two configurations; both must share dimension and
/// ambient presentation.  Throws domain_error on mismatch.
CorrelationPoint gram(const Configuration& a, const Configuration& b);

/// Reads d*m whitespace-separated decimals, row-major; '#' starts a comment
/// line.  Rows are renormalized in floating point and stored as rationals
/// (denominators <= 1e12); the configuration is float-backed.  Throws
/// parse_error with position on malformed input.
Configuration parse_packing(std::istream& in, int d, int m);

/// All original lines plus normalized edge midpoints (a +- b)/|a +- b| with
/// the sign aligned to the closer endpoint pair; orthogonal pairs contribute
/// both bisectors.  Duplicate and antipodal lines are removed.
Configuration augment_edge_midpoints(const Configuration& conf);

/// Import path for externally produced witness factors (improved points
/// P' = <a_x, b_y> from outside solvers): like parse_packing but with a
/// feasibility check that every input row is unit-norm within norm_tol
/// before the rational snap (domain_error otherwise).
Configuration import_witness_factors(std::istream& in, int d, int m,
                                     double norm_tol = 1e-9);

}  // namespace kgd

#endif  // KGD_CONFIGURATION_HPP
