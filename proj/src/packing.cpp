#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "kgd/configuration.hpp"
#include "kgd/errors.hpp"

namespace kgd {

Configuration parse_packing(std::istream& in, int d, int m) {
  if (d < 1 || m < 1) throw domain_error("parse_packing: bad shape");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(d) * m);
  std::string line;
  long lineno = 0;
  long last_col = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      last_col = static_cast<long>(ls.tellg());
      if (last_col < 0) last_col = static_cast<long>(line.size());
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw parse_error("parse_packing: bad token '" + tok + "'", lineno,
                          last_col);
      }
      if (used != tok.size() || !std::isfinite(v))
        throw parse_error("parse_packing: bad token '" + tok + "'", lineno,
                          last_col);
      values.push_back(v);
      if (values.size() == static_cast<std::size_t>(d) * m) break;
    }
    if (values.size() == static_cast<std::size_t>(d) * m) break;
  }
  if (values.size() < static_cast<std::size_t>(d) * m)
    throw parse_error("parse_packing: expected " + std::to_string(d * m) +
                          " numbers, got " + std::to_string(values.size()),
                      lineno, last_col);

  Configuration conf;
  conf.name = "packing-" + std::to_string(d) + "x" + std::to_string(m);
  conf.dim = d;
  conf.float_backed = true;
  conf.vectors = ExactMat(m, d);
  conf.norm2.assign(m, ExactScalar(1));
  for (int i = 0; i < m; ++i) {
    double n2 = 0.0;
    for (int j = 0; j < d; ++j) {
      double v = values[static_cast<std::size_t>(i) * d + j];
      n2 += v * v;
    }
    if (n2 < 1e-24)
      throw parse_error("parse_packing: zero row", i + 1, 0);
    double inv = 1.0 / std::sqrt(n2);
    for (int j = 0; j < d; ++j) {
      double v = values[static_cast<std::size_t>(i) * d + j] * inv;
      conf.vectors(i, j) = ExactScalar(rationalize(v, 1000000000000ll));
    }
  }
  return conf;
}

Configuration import_witness_factors(std::istream& in, int d, int m,
                                     double norm_tol) {
  // Re-parse with the raw norms audited: a witness from an outside solver
  // must already state unit vectors, so anything off by more than norm_tol
  // is rejected rather than silently fixed.
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(d) * m);
  {
    // parse_packing tolerates loose norms; run it first for its syntax
    // checks, then audit the raw rows.
    std::stringstream copy;
    copy << in.rdbuf();
    std::istringstream first_pass(copy.str());
    (void)parse_packing(first_pass, d, m);
    std::istringstream second_pass(copy.str());
    std::string tok;
    while (values.size() < static_cast<std::size_t>(d) * m &&
           second_pass >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(second_pass, rest);
        continue;
      }
      values.push_back(std::stod(tok));
    }
  }
  Configuration conf;
  conf.name = "witness-" + std::to_string(d) + "x" + std::to_string(m);
  conf.dim = d;
  conf.float_backed = true;
  conf.vectors = ExactMat(m, d);
  conf.norm2.assign(m, ExactScalar(1));
  for (int i = 0; i < m; ++i) {
    double n2 = 0.0;
    for (int j = 0; j < d; ++j) {
      double v = values[static_cast<std::size_t>(i) * d + j];
      n2 += v * v;
    }
    if (std::fabs(n2 - 1.0) > 2.0 * norm_tol)
      throw domain_error("import_witness_factors: row " + std::to_string(i) +
                         " is not unit-norm within tolerance");
    double inv = 1.0 / std::sqrt(n2);
    for (int j = 0; j < d; ++j) {
      double v = values[static_cast<std::size_t>(i) * d + j] * inv;
      conf.vectors(i, j) = ExactScalar(rationalize(v, 1000000000000ll));
    }
  }
  return conf;
}

namespace {

// Proportionality test u = c*v (c != 0), exact.
bool same_line(const ExactMat& rows, int i, int j,
               const std::vector<ExactScalar>& norm2) {
  ExactScalar dot;
  for (int k = 0; k < rows.cols(); ++k) dot += rows(i, k) * rows(j, k);
  if (dot.is_zero()) return false;
  return dot * dot == norm2[i] * norm2[j];
}

}  // namespace

Configuration augment_edge_midpoints(const Configuration& conf) {
  if (conf.m() < 2)
    throw domain_error("augment_edge_midpoints: need at least two lines");
  Configuration out;
  out.name = conf.name + "+midpoints";
  out.dim = conf.dim;
  out.float_backed = conf.float_backed;
  std::vector<std::vector<ExactScalar>> rows;
  std::vector<ExactScalar> norms;
  auto push_row = [&](std::vector<ExactScalar> row) {
    ExactScalar n2;
    for (const auto& v : row) n2 += v * v;
    if (n2.is_zero()) return;  // degenerate midpoint: pair skipped
    rows.push_back(std::move(row));
    norms.push_back(std::move(n2));
  };
  for (int i = 0; i < conf.m(); ++i) {
    std::vector<ExactScalar> row(conf.ambient());
    for (int j = 0; j < conf.ambient(); ++j) row[j] = conf.vectors(i, j);
    push_row(std::move(row));
  }
  for (int i = 0; i < conf.m(); ++i) {
    for (int j = i + 1; j < conf.m(); ++j) {
      ExactScalar dot = conf.line_dot(i, conf, j);
      int sgn = dot.sign();
      // Midpoints of the closer endpoint pair; an orthogonal pair has two
      // geometrically distinct bisectors, keep both.
      std::vector<int> signs =
          sgn == 0 ? std::vector<int>{+1, -1} : std::vector<int>{sgn};
      for (int s : signs) {
        // Raw representatives may carry different norms; combine the unit
        // representatives scaled by the common norm product so coordinates
        // stay exact:  u*|v| + s*v*|u| is parallel to u/|u| + s*v/|v|.
        // For equal-norm families this reduces to u + s*v.
        std::vector<ExactScalar> row(conf.ambient());
        if (conf.norm2[i] == conf.norm2[j]) {
          for (int k = 0; k < conf.ambient(); ++k) {
            row[k] = conf.vectors(i, k) +
                     (s > 0 ? conf.vectors(j, k) : -conf.vectors(j, k));
          }
        } else {
          auto ri = conf.norm2[i].exact_sqrt();
          auto rj = conf.norm2[j].exact_sqrt();
          if (ri && rj) {
            for (int k = 0; k < conf.ambient(); ++k) {
              ExactScalar t = conf.vectors(i, k) * (*rj);
              ExactScalar u = conf.vectors(j, k) * (*ri);
              row[k] = t + (s > 0 ? u : -u);
            }
          } else {
            // Fall back to float-backed combination.
            double inv_i = 1.0 / std::sqrt(conf.norm2[i].to_double());
            double inv_j = 1.0 / std::sqrt(conf.norm2[j].to_double());
            for (int k = 0; k < conf.ambient(); ++k) {
              double v = conf.vectors(i, k).to_double() * inv_i +
                         s * conf.vectors(j, k).to_double() * inv_j;
              row[k] = ExactScalar(rationalize(v, 1000000000000ll));
            }
            out.float_backed = true;
          }
        }
        push_row(std::move(row));
      }
    }
  }
  // Deduplicate lines (duplicates and antipodes collapse).
  ExactMat all(static_cast<int>(rows.size()), conf.ambient());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < conf.ambient(); ++j)
      all(static_cast<int>(i), j) = rows[i][j];
  std::vector<int> keep;
  for (int i = 0; i < all.rows(); ++i) {
    bool dup = false;
    for (int k : keep) {
      if (same_line(all, i, k, norms)) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  out.vectors = ExactMat(static_cast<int>(keep.size()), conf.ambient());
  out.norm2.clear();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (int j = 0; j < conf.ambient(); ++j)
      out.vectors(static_cast<int>(i), j) = all(keep[i], j);
    out.norm2.push_back(norms[keep[i]]);
  }
  if (out.float_backed) {
    // Renormalize rows so downstream treats them as unit lines.
    for (int i = 0; i < out.m(); ++i) {
      double n2 = 0.0;
      for (int j = 0; j < out.ambient(); ++j) {
        double v = out.vectors(i, j).to_double();
        n2 += v * v;
      }
      double inv = 1.0 / std::sqrt(n2);
      for (int j = 0; j < out.ambient(); ++j) {
        out.vectors(i, j) = ExactScalar(
            rationalize(out.vectors(i, j).to_double() * inv, 1000000000000ll));
      }
      out.norm2[i] = ExactScalar(1);
    }
  }
  return out;
}

}  // namespace kgd
