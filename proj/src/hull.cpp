#include "kgd/hull.hpp"

#include <algorithm>
#include <cmath>

#include "kgd/errors.hpp"

namespace kgd {

namespace {

// Solve the d x d system A n = 1 by Gaussian elimination; returns false if
// (numerically) singular.
bool solve_unit_rhs(std::vector<std::vector<double>> a, int d,
                    std::vector<double>& n) {
  std::vector<double> rhs(d, 1.0);
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-11) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int k = col; k < d; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  n.resize(d);
  for (int i = 0; i < d; ++i) n[i] = rhs[i] / a[i][i];
  return true;
}

// Exact variant over ExactScalar; returns nullopt when singular.
std::optional<std::vector<ExactScalar>> solve_unit_rhs_exact(
    std::vector<std::vector<ExactScalar>> a, int d) {
  std::vector<ExactScalar> rhs(d, ExactScalar(1));
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r) {
      if (a[r][col].sign() != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      if (a[r][col].is_zero()) continue;
      ExactScalar f = a[r][col] / a[col][col];
      for (int k = col; k < d; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<ExactScalar> n(d);
  for (int i = 0; i < d; ++i) n[i] = rhs[i] / a[i][i];
  return n;
}

}  // namespace

ShrinkingFactor shrinking_factor(const Configuration& conf) {
  const int d = conf.ambient();
  if (conf.dim != conf.ambient())
    throw domain_error(
        "shrinking_factor: configuration uses an embedded presentation");
  if (d < 2 || d > 4)
    throw domain_error("shrinking_factor: dimension must be 2..4");
  if (conf.m() > 500)
    throw domain_error("shrinking_factor: more than 500 lines");

  // Centrally symmetrized, normalized point cloud.
  RealMat unit = conf.unit_rows();
  const int npts = 2 * conf.m();
  std::vector<std::vector<double>> pts(npts, std::vector<double>(d));
  for (int i = 0; i < conf.m(); ++i)
    for (int j = 0; j < d; ++j) {
      pts[2 * i][j] = unit(i, j);
      pts[2 * i + 1][j] = -unit(i, j);
    }

  const bool exact_mode = !conf.float_backed && conf.m() <= 40;

  ShrinkingFactor out;
  double best_dist2 = 1e300;
  std::optional<ExactScalar> best_norm2_exact;  // |n|^2 of the witness

  // Enumerate d-subsets of the symmetrized points; keep supporting planes.
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  auto next_comb = [&]() {
    int i = d - 1;
    while (i >= 0 && comb[i] == npts - d + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int k = i + 1; k < d; ++k) comb[k] = comb[k - 1] + 1;
    return true;
  };
  bool any_facet = false;
  do {
    std::vector<std::vector<double>> a(d, std::vector<double>(d));
    for (int i = 0; i < d; ++i) a[i] = pts[comb[i]];
    std::vector<double> n;
    if (!solve_unit_rhs(a, d, n)) continue;
    // Supporting check: <n, p> <= 1 for every point (slack for floats).
    bool supporting = true;
    for (int i = 0; i < npts && supporting; ++i) {
      double dot = 0.0;
      for (int j = 0; j < d; ++j) dot += n[j] * pts[i][j];
      if (dot > 1.0 + 1e-9) supporting = false;
    }
    if (!supporting) continue;
    any_facet = true;
    double n2 = 0.0;
    for (int j = 0; j < d; ++j) n2 += n[j] * n[j];
    double dist2 = 1.0 / n2;
    out.facet_normals.push_back(n);
    if (dist2 < best_dist2 - 1e-15) {
      best_dist2 = dist2;
      out.witness_normal = n;
      if (exact_mode) {
        // Re-derive the witness plane exactly.  When the d chosen points
        // share the squared norm nu, the plane <g, v_i> = nu through the
        // raw representatives gives eta^2 = nu / |g|^2 with no square root.
        best_norm2_exact.reset();
        bool same_norm = true;
        ExactScalar nu = conf.norm2[comb[0] / 2];
        for (int i = 1; i < d; ++i)
          if (!(conf.norm2[comb[i] / 2] == nu)) same_norm = false;
        if (same_norm) {
          std::vector<std::vector<ExactScalar>> ae(
              d, std::vector<ExactScalar>(d));
          for (int i = 0; i < d; ++i) {
            int p = comb[i] / 2;
            int sgn = comb[i] % 2 == 0 ? 1 : -1;
            for (int j = 0; j < d; ++j)
              ae[i][j] = sgn > 0 ? conf.vectors(p, j) : -conf.vectors(p, j);
          }
          if (auto ge = solve_unit_rhs_exact(ae, d)) {
            // <g, v_i> = 1 on raw points means the unit-point normal is
            // g*sqrt(nu), so |n|^2 = |g|^2 * nu exactly.
            ExactScalar g2;
            for (int j = 0; j < d; ++j) g2 += (*ge)[j] * (*ge)[j];
            best_norm2_exact = g2 * nu;
          }
        }
      }
    }
  } while (next_comb());

  if (!any_facet)
    throw domain_error(
        "shrinking_factor: point set is not full-dimensional (no supporting "
        "facets found)");

  if (best_norm2_exact) {
    out.eta2_exact = ExactScalar(1) / *best_norm2_exact;
    out.eta2 = out.eta2_exact->to_double();
    out.eta = std::sqrt(out.eta2);
  } else {
    // Certified from below: shave the float slack.
    out.eta2 = best_dist2 * (1.0 - 1e-9);
    out.eta = std::sqrt(out.eta2);
  }
  return out;
}

Configuration refine_by_facet_centers(const Configuration& conf) {
  if (conf.dim != 3 || conf.ambient() != 3)
    throw domain_error("refine_by_facet_centers: only 3-dimensional hulls");
  ShrinkingFactor hull = shrinking_factor(conf);
  RealMat unit = conf.unit_rows();
  std::vector<std::vector<double>> lines;
  for (int i = 0; i < conf.m(); ++i)
    lines.push_back({unit(i, 0), unit(i, 1), unit(i, 2)});
  // A facet centroid is the mean of the points lying on the facet plane.
  for (const auto& n : hull.facet_normals) {
    std::vector<double> c(3, 0.0);
    int count = 0;
    for (int i = 0; i < conf.m(); ++i) {
      for (int s : {+1, -1}) {
        double dot = 0.0;
        for (int j = 0; j < 3; ++j) dot += n[j] * s * unit(i, j);
        if (std::fabs(dot - 1.0) < 1e-9) {
          for (int j = 0; j < 3; ++j) c[j] += s * unit(i, j);
          ++count;
        }
      }
    }
    if (count < 3) continue;
    double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    if (norm < 1e-12) continue;
    for (double& x : c) x /= norm;
    // Keep one representative per line.
    bool dup = false;
    for (const auto& l : lines) {
      double dot = l[0] * c[0] + l[1] * c[1] + l[2] * c[2];
      if (std::fabs(std::fabs(dot) - 1.0) < 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) lines.push_back(c);
  }
  Configuration out;
  out.name = conf.name + "+centers";
  out.dim = 3;
  out.float_backed = true;
  out.isometries = conf.isometries;  // symmetry is inherited geometrically
  out.vectors = ExactMat(static_cast<int>(lines.size()), 3);
  out.norm2.assign(lines.size(), ExactScalar(1));
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (int j = 0; j < 3; ++j)
      out.vectors(static_cast<int>(i), j) =
          ExactScalar(rationalize(lines[i][j], 1000000000000ll));
  return out;
}

}  // namespace kgd
