#ifndef KGD_GROUP_HPP
#define KGD_GROUP_HPP

#include <cstdint>
#include <vector>

#include "kgd/configuration.hpp"
#include "kgd/matrix.hpp"
#include "kgd/strategies.hpp"

namespace kgd {

/// Signed permutation of {0..n-1}: index i maps to image(i) with sign(i).
struct SignedPerm {
  // img[i] = s*(j+1) encodes i -> j with sign s in {+1,-1}.
  std::vector<std::int32_t> img;

  int size() const { return static_cast<int>(img.size()); }
  int target(int i) const { return std::abs(img[i]) - 1; }
  int sgn(int i) const { return img[i] > 0 ? 1 : -1; }

  static SignedPerm identity(int n);
  /// Composition: (a * b)(i) = a(b(i)), signs multiplied.
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  bool operator==(const SignedPerm& o) const { return img == o.img; }
  bool operator<(const SignedPerm& o) const { return img < o.img; }
  bool is_identity() const;
  void validate() const;  // throws domain_error on malformed images
};

/// Group element acting on m1 x m2 matrices by
/// (g.M)_{row(x), col(y)} = rowsign(x) colsign(y) M_{x,y}.
struct GroupElement {
  SignedPerm row, col;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return {a.row * b.row, a.col * b.col};
  }
  bool operator==(const GroupElement& o) const {
    return row == o.row && col == o.col;
  }
  bool operator<(const GroupElement& o) const {
    if (!(row == o.row)) return row < o.row;
    return col < o.col;
  }
};

/// Finitely generated group of signed permutation pairs.
struct SignedPermutationGroup {
  int m1 = 0, m2 = 0;
  std::vector<GroupElement> generators;

  bool trivial() const { return generators.empty(); }

  /// Full element list by breadth-first closure.  Throws resource_error if
  /// the closure exceeds cap elements.
  std::vector<GroupElement> closure(std::size_t cap = 1000000) const;
  std::size_t order(std::size_t cap = 1000000) const {
    return closure(cap).size();
  }
};

/// Signed orbit partition of the m1 x m2 coordinate cells under the group
/// generated by the generators.  Cells whose orbit identifies a cell with
/// its own negation are forced to zero in every invariant matrix.
class InvariantBasis {
 public:
  InvariantBasis() = default;
  InvariantBasis(const SignedPermutationGroup& g);  // NOLINT

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int orbit_count() const { return orbit_count_; }
  /// Number of orbits not forced to zero: the dimension of the invariant
  /// subspace.
  int dim() const { return free_dim_; }
  int orbit_of(int x, int y) const { return orbit_[cell(x, y)]; }
  int sign_of(int x, int y) const { return sign_[cell(x, y)]; }
  bool forced_zero_orbit(int o) const { return forced_zero_[o]; }
  int orbit_size(int o) const { return orbit_size_[o]; }

  /// Orthogonal projection onto the invariant subspace (signed orbit
  /// averaging); exact overload averages exactly.
  RealMat project(const RealMat& m) const;
  ExactMat project(const ExactMat& m) const;

  /// Coordinates of an invariant matrix: one value per free orbit (the value
  /// at the orbit representative); inverse of expand().
  std::vector<double> coords(const RealMat& m) const;
  RealMat expand(const std::vector<double>& coords) const;
  /// Weight of each free-orbit coordinate in the Frobenius inner product.
  std::vector<double> coord_weights() const;

 private:
  std::size_t cell(int x, int y) const {
    return static_cast<std::size_t>(x) * m2_ + y;
  }
  int m1_ = 0, m2_ = 0;
  int orbit_count_ = 0;
  int free_dim_ = 0;
  std::vector<int> orbit_;       // per cell
  std::vector<int> sign_;        // per cell, relative to orbit representative
  std::vector<char> forced_zero_;  // per orbit
  std::vector<int> orbit_size_;    // per orbit
  std::vector<std::size_t> rep_;   // per orbit: representative cell
  std::vector<int> free_index_;    // per orbit: index among free orbits or -1
  std::vector<int> free_orbits_;   // free index -> orbit id
};

/// |G|^-1 sum_g g.M via the full element list (small groups); the orbit
/// projection above is the fast path used in the pipeline.
RealMat symmetrize(const RealMat& m, const std::vector<GroupElement>& elements);
ExactMat symmetrize(const ExactMat& m,
                    const std::vector<GroupElement>& elements);

/// Applies one element to a matrix.
RealMat apply_element(const GroupElement& g, const RealMat& m);
ExactMat apply_element(const GroupElement& g, const ExactMat& m);

/// Maps a sign strategy through a group element (vertices map to vertices).
SignStrategy apply_element(const GroupElement& g, const SignStrategy& s);

/// Derives the line-level signed permutation induced by an exact isometry on
/// a configuration (isometry * row k = +- row j exactly for some j).  Throws
/// domain_error if the isometry does not preserve the line set.
SignedPerm induced_line_perm(const Configuration& conf, const ExactMat& iso);

/// Float-tolerance variant for float-backed configurations: matches the
/// rotated unit rows against the line set within tol.
SignedPerm induced_line_perm_float(const Configuration& conf,
                                   const ExactMat& iso, double tol = 1e-9);

/// Line-level symmetry generators for a correlation point, derived from the
/// witnesses' shared isometry hints.  Returns an empty group when the hints
/// are absent or incompatible.
SignedPermutationGroup derive_group(const CorrelationPoint& p);

/// Checks invariance of a matrix under all generators (exact).
bool is_invariant(const ExactMat& m, const SignedPermutationGroup& g);

}  // namespace kgd

#endif  // KGD_GROUP_HPP
