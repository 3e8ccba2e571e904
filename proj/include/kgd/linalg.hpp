#ifndef KGD_LINALG_HPP
#define KGD_LINALG_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "kgd/matrix.hpp"
#include "kgd/rational.hpp"

namespace kgd {

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues (ascending) and the matching orthonormal columns.
inline std::pair<std::vector<double>, RealMat> jacobi_eigen(RealMat a,
                                                            int sweeps = 64) {
  const int n = a.rows();
  RealMat v(n, n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (eig[idx[j]] < eig[idx[i]]) std::swap(idx[i], idx[j]);
  std::vector<double> values(n);
  RealMat vectors(n, n);
  for (int i = 0; i < n; ++i) {
    values[i] = eig[idx[i]];
    for (int k = 0; k < n; ++k) vectors(k, i) = v(k, idx[i]);
  }
  return {values, vectors};
}

/// Numerical rank of a list of row vectors by modified Gram-Schmidt with a
/// relative threshold.
inline int numeric_rank(std::vector<std::vector<double>> rows,
                        double rel_threshold = 1e-7) {
  double max_norm = 0.0;
  for (const auto& r : rows) {
    double n2 = 0.0;
    for (double x : r) n2 += x * x;
    max_norm = std::max(max_norm, std::sqrt(n2));
  }
  if (max_norm == 0.0) return 0;
  const double thr = rel_threshold * max_norm;
  std::vector<std::vector<double>> basis;
  for (auto& r : rows) {
    for (const auto& b : basis) {
      double dot = 0.0, bn = 0.0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        dot += r[k] * b[k];
        bn += b[k] * b[k];
      }
      double f = dot / bn;
      for (std::size_t k = 0; k < r.size(); ++k) r[k] -= f * b[k];
    }
    double n2 = 0.0;
    for (double x : r) n2 += x * x;
    if (std::sqrt(n2) > thr) basis.push_back(r);
  }
  return static_cast<int>(basis.size());
}

/// Exact rank of rational row vectors (Gaussian elimination).
inline int exact_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++r) {
    // find pivot
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][lead].is_zero()) ++piv;
    if (piv == rows.size()) {
      ++lead;
      --r;
      continue;
    }
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][lead].is_zero()) continue;
      Rational f = rows[i][lead] / rows[r][lead];
      for (int k = lead; k < cols; ++k)
        rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    ++rank;
    ++lead;
  }
  return rank;
}

}  // namespace kgd

#endif  // KGD_LINALG_HPP
