#include "kgd/projection.hpp"

#include <algorithm>
#include <cmath>

#include "kgd/diag_search.hpp"
#include "kgd/errors.hpp"
#include "kgd/linalg.hpp"
#include "kgd/oracle.hpp"

namespace kgd {

double ActiveSet::weight_sum() const {
  double s = 0.0;
  for (const auto& v : vertices) s += v.weight;
  return s;
}

namespace {

RealMat vertex_matrix(const OracleResult& r, const InvariantBasis* sym) {
  RealMat m = r.correlation();
  return sym ? sym->project(m) : m;
}

bool same_vertex(const ActiveVertex& a, const ActiveVertex& b) {
  if (a.sign && b.sign) {
    // Sign strategies match up to a global flip.
    if (*a.sign == *b.sign) return true;
    SignStrategy flipped = *b.sign;
    for (auto& s : flipped.a) s = static_cast<std::int8_t>(-s);
    for (auto& s : flipped.b) s = static_cast<std::int8_t>(-s);
    return *a.sign == flipped;
  }
  if (!a.avg.same_shape(b.avg)) return false;
  for (std::size_t i = 0; i < a.avg.data().size(); ++i)
    if (std::fabs(a.avg.data()[i] - b.avg.data()[i]) > 1e-13) return false;
  return true;
}

void rebuild_iterate(ActiveSet& s) {
  if (s.vertices.empty()) return;
  RealMat x(s.vertices[0].avg.rows(), s.vertices[0].avg.cols());
  for (const auto& v : s.vertices)
    for (std::size_t i = 0; i < x.data().size(); ++i)
      x.data()[i] += v.weight * v.avg.data()[i];
  s.iterate = std::move(x);
}

void prune_weights(ActiveSet& s) {
  bool any_dropped = false;
  for (const auto& v : s.vertices) {
    if (v.weight <= 1e-12) {
      any_dropped = true;
      break;
    }
  }
  if (!any_dropped) return;
  std::vector<ActiveVertex> kept;
  kept.reserve(s.vertices.size());
  for (auto& v : s.vertices)
    if (v.weight > 1e-12) kept.push_back(std::move(v));
  s.vertices = std::move(kept);
  double total = s.weight_sum();
  if (total > 0)
    for (auto& v : s.vertices) v.weight /= total;
  rebuild_iterate(s);
}

}  // namespace

BpcgResult bpcg_project(const RealMat& target, const ProjectionOptions& opts) {
  if (opts.tol <= 0) throw domain_error("bpcg_project: tol must be positive");
  BpcgResult res;
  OracleOptions lo;
  lo.n = opts.n;
  lo.restarts = opts.lmo_restarts;
  lo.threads = opts.threads;
  // Oracle precision only affects progress per iteration, not soundness.
  lo.improvement_tol = 1e-8;
  lo.max_alternations = 80;

  ActiveSet& S = res.active;
  auto add_vertex = [&](const OracleResult& r, double weight) {
    ActiveVertex v;
    v.sign = r.sign_strategy;
    v.unit = r.unit_strategy;
    v.avg = vertex_matrix(r, opts.sym);
    v.weight = weight;
    for (auto& existing : S.vertices) {
      if (same_vertex(existing, v)) {
        existing.weight += weight;
        return;
      }
    }
    S.vertices.push_back(std::move(v));
  };

  // First vertex: best response to the target itself.
  lo.seed = opts.seed;
  OracleResult first = lmo(target * -1.0, lo);
  add_vertex(first, 1.0);
  rebuild_iterate(S);

  RealMat x = S.iterate;
  double gap = 0.0;
  long it = 0;
  for (it = 0; it < opts.max_iter; ++it) {
    RealMat grad = x - target;
    if (opts.record_objective)
      res.objective_history.push_back(0.5 * frob_norm2(grad));

    // Active-set extremes w.r.t. the gradient.
    std::size_t away = 0, local = 0;
    double away_val = -1e300, local_val = 1e300;
    for (std::size_t i = 0; i < S.vertices.size(); ++i) {
      double v = frob_dot(grad, S.vertices[i].avg);
      if (v > away_val) {
        away_val = v;
        away = i;
      }
      if (v < local_val) {
        local_val = v;
        local = i;
      }
    }
    // Global oracle vertex.
    lo.seed = opts.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(it + 1);
    OracleResult w = lmo(grad, lo);
    RealMat w_mat = vertex_matrix(w, opts.sym);
    double w_val = frob_dot(grad, w_mat);
    bool w_from_active = false;
    if (local_val < w_val) {
      // The oracle is heuristic; never let it fall behind the active set,
      // so the reported gap stays nonnegative.
      w_val = local_val;
      w_mat = S.vertices[local].avg;
      w_from_active = true;
    }
    gap = frob_dot(grad, x) - w_val;
    if (gap <= opts.tol) {
      res.converged = true;
      break;
    }

    double pairwise_gap = away_val - local_val;
    if (pairwise_gap >= gap) {
      // Pairwise step: move weight from the away vertex to the local one.
      RealMat d = S.vertices[away].avg - S.vertices[local].avg;
      double dn = frob_norm2(d);
      if (dn <= 1e-300) continue;
      double step = std::min(pairwise_gap / dn, S.vertices[away].weight);
      x = x - d * step;
      S.vertices[away].weight -= step;
      S.vertices[local].weight += step;
      if (S.vertices[away].weight <= 1e-15)
        S.vertices.erase(S.vertices.begin() + static_cast<long>(away));
    } else {
      // Frank-Wolfe step toward the oracle vertex.
      RealMat d = x - w_mat;
      double dn = frob_norm2(d);
      if (dn <= 1e-300) continue;
      double step = std::clamp(frob_dot(grad, d) / dn, 0.0, 1.0);
      x = x - d * step;
      for (auto& v : S.vertices) v.weight *= (1.0 - step);
      if (w_from_active) {
        S.vertices[local].weight += step;
      } else {
        add_vertex(w, step);
      }
    }
    if ((it & 0x3ff) == 0x3ff) {
      prune_weights(S);
      rebuild_iterate(S);
      x = S.iterate;
    }
  }
  prune_weights(S);
  rebuild_iterate(S);
  res.x = S.iterate;
  res.gap = gap;
  res.iterations = it;
  if (!res.converged && gap <= opts.tol) res.converged = true;
  return res;
}

ExactScalar v_update(const ExactMat& m, const ExactMat& p,
                     const ExactScalar& sdp_value) {
  if (sdp_value.sign() <= 0)
    throw domain_error("v_update: degenerate direction (sdp value <= 0)");
  return frob_dot(m, p) / sdp_value;
}

IntegerizeResult integerize_normal(const RealMat& m,
                                   std::int64_t denominator_cap) {
  double maxabs = 0.0;
  for (double v : m.data()) maxabs = std::max(maxabs, std::fabs(v));
  if (maxabs == 0.0) throw domain_error("integerize_normal: zero direction");
  // Common denominator from per-entry continued fractions, capped.
  std::int64_t lcm = 1;
  for (double v : m.data()) {
    Rational r = rationalize(v / maxabs, std::min<std::int64_t>(
                                             denominator_cap, 100000));
    BigInt g = BigInt::gcd(BigInt(lcm), r.den());
    BigInt l = BigInt(lcm) / g * r.den();
    if (!l.fits_int64() || l > BigInt(denominator_cap)) {
      lcm = 0;
      break;
    }
    lcm = l.to_int64();
  }
  auto try_denominator = [&](std::int64_t q)
      -> std::optional<IntegerizeResult> {
    IntegerizeResult out;
    out.denominator = q;
    out.matrix = ExactMat(m.rows(), m.cols());
    out.max_perturbation = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        double scaled = m(i, j) / maxabs * static_cast<double>(q);
        double rounded = std::nearbyint(scaled);
        out.max_perturbation =
            std::max(out.max_perturbation,
                     std::fabs(scaled - rounded) / static_cast<double>(q));
        out.matrix(i, j) =
            ExactScalar(static_cast<std::int64_t>(rounded));
      }
    }
    if (out.max_perturbation > 1e-6) return std::nullopt;
    return out;
  };
  if (lcm > 0) {
    auto r = try_denominator(lcm);
    if (r) return *r;
  }
  for (std::int64_t q = 1; q <= std::min<std::int64_t>(denominator_cap, 10000);
       ++q) {
    auto r = try_denominator(q);
    if (r) return *r;
  }
  throw domain_error(
      "integerize_normal: no denominator within cap reproduces the "
      "direction (rounding would flip the separation)");
}

namespace {

// Divide out the integer content so certificates stay small.
void divide_content(ExactMat& m) {
  BigInt g(0);
  for (const auto& e : m.data()) {
    if (e.is_zero()) continue;
    Rational q = e.rational_part();
    g = BigInt::gcd(g, q.num());
  }
  if (g > BigInt(1)) {
    ExactScalar inv = ExactScalar(Rational(BigInt(1), g));
    for (auto& e : m.data()) e *= inv;
  }
}

struct NormalFit {
  ExactMat a;
  std::optional<ExactScalar> lambda;
};

// Reconstructs an exact separating normal from the float direction:
// diagonal-modification fit for square instances whose off-diagonal pattern
// matches P, general integerization otherwise.  Rank one refines the
// modification parameter onto its exact breakpoint; higher ranks keep a
// rational snap of the float estimate (their offsets are heuristic anyway).
std::optional<NormalFit> exact_normal(const RealMat& dir, const ExactMat& p,
                                      const SolveOptions& solver, int rank) {
  const bool square = p.rows() == p.cols();
  if (square) {
    // Fit dir ~ s*(P - lambda I): s from the off-diagonal part.
    double num = 0.0, den = 0.0;
    RealMat pf = to_real(p);
    for (int i = 0; i < p.rows(); ++i) {
      for (int j = 0; j < p.cols(); ++j) {
        if (i == j) continue;
        num += dir(i, j) * pf(i, j);
        den += pf(i, j) * pf(i, j);
      }
    }
    if (den > 0 && num > 0) {
      double s = num / den;
      double resid = 0.0, diag_avg = 0.0;
      for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
          if (i == j) {
            diag_avg += dir(i, j) / s;
          } else {
            double r = dir(i, j) - s * pf(i, j);
            resid += r * r;
          }
        }
      }
      diag_avg /= p.rows();
      if (resid <= 1e-10 * den * s * s) {
        double lam_est = 1.0 - diag_avg;
        if (rank == 1) {
          // The exact parameter sits on a breakpoint of t -> SDP_1[P - tI].
          for (double delta : {1e-3, 1e-2, 5e-2}) {
            auto lam = exact_lambda_near(p, lam_est, delta, solver);
            if (lam && std::fabs(lam->to_double() - lam_est) < 2 * delta) {
              NormalFit fit;
              fit.a = diagonal_modification(p, *lam);
              fit.lambda = *lam;
              return fit;
            }
          }
        }
        // Rational snap of the estimate.
        Rational lam_q = rationalize(lam_est, rank == 1 ? 1000 : 1000000);
        if (rank > 1 || std::fabs(lam_q.to_double() - lam_est) < 1e-6) {
          NormalFit fit;
          fit.a = diagonal_modification(p, ExactScalar(lam_q));
          fit.lambda = ExactScalar(lam_q);
          return fit;
        }
      }
    }
  }
  try {
    IntegerizeResult integer = integerize_normal(dir);
    NormalFit fit;
    fit.a = std::move(integer.matrix);
    divide_content(fit.a);
    return fit;
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

std::vector<std::vector<Rational>> exact_vertex_coords(
    const ActiveSet& s, const InvariantBasis* basis, const ExactMat& p) {
  // Exact orbit-averaged coordinates of the active vertices.  Rank-one
  // strategies average to rational matrices; coordinates are per free orbit.
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : s.vertices) {
    if (!v.sign) continue;
    ExactMat outer(p.rows(), p.cols());
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j)
        outer(i, j) = ExactScalar(static_cast<std::int64_t>(
            v.sign->a[static_cast<std::size_t>(i)] *
            v.sign->b[static_cast<std::size_t>(j)]));
    ExactMat avg = basis ? basis->project(outer) : std::move(outer);
    std::vector<Rational> row;
    if (basis) {
      for (int o = 0, taken = 0; o < basis->orbit_count(); ++o) {
        (void)taken;
        if (basis->forced_zero_orbit(o)) continue;
        // representative value: first cell in the orbit
        bool found = false;
        for (int x = 0; x < p.rows() && !found; ++x)
          for (int y = 0; y < p.cols() && !found; ++y)
            if (basis->orbit_of(x, y) == o) {
              row.push_back(avg(x, y).rational_part() *
                            Rational(basis->sign_of(x, y)));
              found = true;
            }
      }
    } else {
      for (const auto& e : avg.data()) row.push_back(e.rational_part());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int exact_codim(const ActiveSet& s, const InvariantBasis* basis,
                const ExactMat& p, int ambient_dim) {
  auto rows = exact_vertex_coords(s, basis, p);
  if (rows.empty()) return ambient_dim;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<Rational> d(rows[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = rows[i][k] - rows[0][k];
    diffs.push_back(std::move(d));
  }
  int rank = diffs.empty() ? 0 : exact_rank(std::move(diffs));
  return ambient_dim - rank;  // codim of the active affine flat
}

}  // namespace

FacetResult facet_loop(const CorrelationPoint& p, const FacetOptions& opts) {
  FacetResult out;
  const RealMat p_float = to_real(p.entries);

  SignedPermutationGroup group;
  std::optional<InvariantBasis> basis;
  if (opts.group) {
    group = *opts.group;
    if (group.m1 != p.m1() || group.m2 != p.m2())
      throw domain_error("facet_loop: group shape mismatch");
    if (!is_invariant(p.entries, group))
      throw domain_error(
          "facet_loop: supplied group does not leave the correlation matrix "
          "invariant");
    if (!group.trivial()) basis.emplace(group);
  } else if (opts.use_group) {
    group = derive_group(p);
    if (!group.trivial()) basis.emplace(group);
  }
  const int ambient_dim =
      basis ? basis->dim() : p.m1() * p.m2();
  out.invariant_dim = ambient_dim;

  ProjectionOptions proj;
  proj.n = opts.n;
  proj.tol = opts.tol;
  proj.max_iter = opts.max_iter;
  proj.lmo_restarts = opts.lmo_restarts;
  proj.seed = opts.seed;
  proj.threads = opts.threads;
  proj.sym = basis ? &*basis : nullptr;

  double v = 1.0;
  double current_tol = opts.tol;
  const double inside_eps =
      1e-6 * std::sqrt(frob_norm2(p_float) / p_float.data().size());
  BpcgResult run;
  for (long round = 0; round < opts.max_rounds; ++round) {
    out.rounds = round + 1;
    out.v_history.push_back(v);
    proj.tol = current_tol;
    proj.seed = opts.seed + static_cast<std::uint64_t>(round) * 7919u;
    run = bpcg_project(p_float * v, proj);
    RealMat dir = p_float * v - run.x;
    double dir_scale = std::sqrt(frob_norm2(dir) / dir.data().size());
    if (dir_scale < inside_eps) {
      if (round == 0) {
        out.status = FacetStatus::inside;
        out.active = run.active;
        out.separating_float = dir;
        return out;
      }
      // Overshot inside the body; the previous round holds the last
      // informative separating direction.
      break;
    }
    out.separating_float = dir;
    out.active = run.active;

    // Codimension of the active flat (float first, exact on success).
    std::vector<std::vector<double>> rows;
    for (const auto& vx : run.active.vertices) {
      std::vector<double> coords =
          basis ? basis->coords(vx.avg) : vx.avg.data();
      if (basis) {
        auto w = basis->coord_weights();
        for (std::size_t k = 0; k < coords.size(); ++k)
          coords[k] *= std::sqrt(w[k]);
      }
      rows.push_back(std::move(coords));
    }
    int rank = 0;
    if (rows.size() > 1) {
      std::vector<std::vector<double>> diffs;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        std::vector<double> d(rows[i].size());
        for (std::size_t k = 0; k < d.size(); ++k)
          d[k] = rows[i][k] - rows[0][k];
        diffs.push_back(std::move(d));
      }
      rank = numeric_rank(std::move(diffs));
    }
    out.codim = ambient_dim - rank;

    if (out.codim == 1 && run.converged) {
      auto fit = exact_normal(dir, p.entries, opts.solver, opts.n);
      if (fit) {
        // Orientation: separate P from the polytope.
        ExactScalar ap = frob_dot(fit->a, p.entries);
        if (ap.sign() < 0) {
          for (auto& e : fit->a.data()) e = -e;
          if (fit->lambda) fit->lambda.reset();  // sign-flipped fit
          ap = -ap;
        }
        // Active vertices must sit on one level set of A: exactly for sign
        // vertices, within float tolerance for higher-rank extreme points.
        bool level_ok = true;
        std::optional<ExactScalar> level;
        double float_level = 0.0;
        bool have_float_level = false;
        RealMat a_float = to_real(fit->a);
        for (const auto& vx : run.active.vertices) {
          if (vx.sign) {
            ExactScalar val = vertex_value(fit->a, *vx.sign);
            if (!level)
              level = val;
            else if (!(val == *level))
              level_ok = false;
          } else {
            double val = frob_dot(a_float, vx.avg);
            if (!have_float_level) {
              float_level = val;
              have_float_level = true;
            } else if (std::fabs(val - float_level) >
                       1e-6 * (1.0 + std::fabs(float_level))) {
              level_ok = false;
            }
          }
        }
        if (opts.n > 1 && level_ok && have_float_level && !level) {
          OracleOptions oo;
          oo.n = opts.n;
          oo.restarts = std::max<long>(opts.lmo_restarts, 10000);
          oo.seed = opts.seed ^ 0xfacef00dull;
          oo.threads = opts.threads;
          OracleResult h = heuristic_sdp(a_float, oo);
          out.status = FacetStatus::facet;
          out.exact = false;
          out.normal = fit->a;
          out.offset = ExactScalar(rationalize(h.value, 1000000000));
          out.lambda = fit->lambda;
          out.ratio = v_update(fit->a, p.entries, out.offset);
          return out;
        }
        if (level_ok && level) {
          if (opts.n == 1) {
            ExactSolveResult solve =
                p.m1() == p.m2()
                    ? sdp1_branch_and_bound(fit->a, opts.solver)
                    : sdp1_rectangular(fit->a, opts.solver);
            if (solve.optimal && solve.value == *level) {
              out.status = FacetStatus::facet;
              out.exact = true;
              out.normal = fit->a;
              out.offset = solve.value;
              out.lambda = fit->lambda;
              out.ratio = v_update(fit->a, p.entries, solve.value);
              out.codim = exact_codim(run.active, basis ? &*basis : nullptr,
                                      p.entries, ambient_dim);
              return out;
            }
          } else {
            OracleOptions oo;
            oo.n = opts.n;
            oo.restarts = std::max<long>(opts.lmo_restarts, 10000);
            oo.seed = opts.seed ^ 0xfacef00dull;
            oo.threads = opts.threads;
            OracleResult h = heuristic_sdp(to_real(fit->a), oo);
            out.status = FacetStatus::facet;
            out.exact = false;
            out.normal = fit->a;
            out.offset = ExactScalar(rationalize(h.value, 1000000000));
            out.lambda = fit->lambda;
            out.ratio = v_update(fit->a, p.entries, out.offset);
            return out;
          }
        }
      }
    }

    // Move the projected point onto the current separating hyperplane.
    double sdp = 0.0;
    if (opts.n == 1) {
      sdp = sdp1_rounded(dir, opts.solver).value_double();
    } else {
      OracleOptions oo;
      oo.n = opts.n;
      oo.restarts = opts.lmo_restarts;
      oo.seed = opts.seed ^ 0x5d9e0ull;
      oo.threads = opts.threads;
      sdp = heuristic_sdp(dir, oo).value;
    }
    double mp = frob_dot(dir, p_float);
    if (sdp <= 0 || mp <= 0) {
      out.status = FacetStatus::degenerate;
      return out;
    }
    double v_next = sdp / mp;
    // Heuristic offsets underestimate the crossing for rank two and above;
    // stay a hair outside it so the next gradient remains informative.
    if (opts.n > 1) v_next *= 1.001;
    if (v_next >= v) v_next = v * 0.999;  // enforce strict progress
    v = v_next;
    current_tol = std::max(current_tol * 0.1, opts.tol_floor);
  }
  out.status = FacetStatus::separating;
  if (out.separating_float.rows() == 0) {
    out.status = FacetStatus::degenerate;
    return out;
  }
  // Best separating direction, reconstructed but not certified as a facet.
  if (auto fit =
          exact_normal(out.separating_float, p.entries, opts.solver, opts.n)) {
    ExactScalar ap = frob_dot(fit->a, p.entries);
    if (ap.sign() < 0) {
      for (auto& e : fit->a.data()) e = -e;
      if (fit->lambda) fit->lambda.reset();
    }
    out.normal = fit->a;
    out.lambda = fit->lambda;
    if (opts.n == 1) {
      ExactSolveResult solve = p.m1() == p.m2()
                                   ? sdp1_branch_and_bound(fit->a, opts.solver)
                                   : sdp1_rectangular(fit->a, opts.solver);
      out.offset = solve.value;
      out.exact = solve.optimal;
    } else {
      OracleOptions oo;
      oo.n = opts.n;
      oo.restarts = std::max<long>(opts.lmo_restarts, 10000);
      oo.seed = opts.seed ^ 0xfacef00dull;
      oo.threads = opts.threads;
      out.offset = ExactScalar(rationalize(heuristic_sdp(to_real(fit->a), oo).value,
                                           1000000000));
      out.exact = false;
    }
    if (out.offset.sign() > 0)
      out.ratio = v_update(fit->a, p.entries, out.offset);
  }
  return out;
}

DecompositionCertificate decomposition_certificate(
    const ExactMat& p, const Rational& v0, const BpcgResult& run, int n,
    std::optional<double> claimed_epsilon, const InvariantBasis* sym) {
  if (!run.converged)
    throw domain_error("decomposition_certificate: run did not converge");
  if (n < 1 || n > 2)
    throw domain_error("decomposition_certificate: rank must be 1 or 2");
  DecompositionCertificate cert;
  cert.v0 = v0;
  cert.vertex_count = run.active.vertices.size();

  // Exact extreme points: sign vertices are exact; rank-2 unit vectors are
  // snapped to rational points of the circle via the half-angle
  // parametrization t = sin/(1+cos) (flip first so cos >= 0, |t| <= 1).
  const int m1 = p.rows(), m2 = p.cols();
  auto rational_circle =
      [](double c, double s) -> std::pair<Rational, Rational> {
    int flip = c >= 0 ? 1 : -1;
    double cc = c * flip, ss = s * flip;
    Rational t = rationalize(ss / (1.0 + cc), INT64_C(1) << 26);
    Rational one(1);
    Rational den = one + t * t;
    Rational x = (one - t * t) / den * Rational(flip);
    Rational y = (t + t) / den * Rational(flip);
    return {x, y};
  };

  // Accumulate the combination cellwise in double with a running error
  // bound; every vertex entry is the double image of an exact rational, so
  // each term carries at most one rounding plus the accumulation error.
  std::vector<double> acc(static_cast<std::size_t>(m1) * m2, 0.0);
  double weight_sum = 0.0;
  for (const auto& vx : run.active.vertices) {
    weight_sum += vx.weight;
    RealMat corr(m1, m2);
    if (vx.sign) {
      for (int x = 0; x < m1; ++x)
        for (int y = 0; y < m2; ++y)
          corr(x, y) = vx.sign->a[static_cast<std::size_t>(x)] *
                       static_cast<double>(
                           vx.sign->b[static_cast<std::size_t>(y)]);
    } else if (vx.unit && vx.unit->n == 2) {
      std::vector<std::pair<Rational, Rational>> as(m1), bs(m2);
      for (int x = 0; x < m1; ++x)
        as[x] = rational_circle(vx.unit->a(x, 0), vx.unit->a(x, 1));
      for (int y = 0; y < m2; ++y)
        bs[y] = rational_circle(vx.unit->b(y, 0), vx.unit->b(y, 1));
      for (int x = 0; x < m1; ++x) {
        double ax = as[x].first.to_double(), ay = as[x].second.to_double();
        for (int y = 0; y < m2; ++y)
          corr(x, y) = ax * bs[y].first.to_double() +
                       ay * bs[y].second.to_double();
      }
    } else {
      throw domain_error("decomposition_certificate: unsupported vertex");
    }
    // Orbit averaging keeps the combination inside the body: each orbit
    // element is the same extreme point re-indexed by a signed permutation.
    if (sym) corr = sym->project(corr);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += vx.weight * corr.data()[i];
  }
  if (weight_sum <= 0)
    throw domain_error("decomposition_certificate: empty active set");

  // Residual of the normalized combination against v0 * P.
  const double v0d = v0.to_double();
  double resid2 = 0.0;
  double mag = 0.0;
  for (int x = 0; x < m1; ++x) {
    for (int y = 0; y < m2; ++y) {
      double combo = acc[static_cast<std::size_t>(x) * m2 + y] / weight_sum;
      double r = v0d * p(x, y).to_double() - combo;
      resid2 += r * r;
      mag += std::fabs(r);
    }
  }
  // Certified rounding: the double pipeline above accumulates at most a few
  // thousand operations per cell; 1e-9 absolute slack dwarfs that error for
  // every instance this toolkit produces.
  double eps_up = std::sqrt(resid2) * (1.0 + 1e-9) +
                  1e-12 * (mag + 1.0) + 1e-9;
  if (claimed_epsilon && eps_up > *claimed_epsilon)
    throw domain_error(
        "decomposition_certificate: recomputed residual exceeds the claimed "
        "epsilon");
  cert.epsilon = eps_up;
  // alpha = v0 / (1 + eps), with eps rounded up to an exact dyadic.
  Rational eps_rat = Rational::from_double_exact(
      std::nextafter(eps_up, 1e300));
  cert.alpha = v0 / (Rational(1) + eps_rat);
  return cert;
}

}  // namespace kgd
