#include "kgd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "kgd/errors.hpp"
#include "kgd/oracle.hpp"

namespace kgd {

namespace {

// Scaled-integer view of an exact matrix: entry(i,j) = sum_k plane[k](i,j)
// * sqrt(basis[k]) / denom, with int64 planes.  All certificate solves in
// this codebase have small common denominators; anything else is rejected.
struct ScaledMatrix {
  int m1 = 0, m2 = 0;
  std::vector<std::int64_t> basis;                // squarefree, sorted
  std::vector<std::vector<std::int64_t>> planes;  // basis-major, m1*m2 each
  std::int64_t denom = 1;
  std::vector<double> sqrt_basis;
  bool rational_only = false;

  std::size_t cell(int x, int y) const {
    return static_cast<std::size_t>(x) * m2 + y;
  }

  static ScaledMatrix build(const ExactMat& m) {
    ScaledMatrix s;
    s.m1 = m.rows();
    s.m2 = m.cols();
    std::vector<std::int64_t> basis;
    BigInt denom(1);
    for (const auto& e : m.data()) {
      for (const auto& [rad, coeff] : e.terms()) {
        if (std::find(basis.begin(), basis.end(), rad) == basis.end())
          basis.push_back(rad);
        BigInt g = BigInt::gcd(denom, coeff.den());
        denom = denom / g * coeff.den();
      }
    }
    std::sort(basis.begin(), basis.end());
    if (basis.empty()) basis.push_back(1);
    if (!denom.fits_int64())
      throw resource_error(
          "exact solver: common denominator exceeds 64-bit range");
    s.denom = denom.to_int64();
    s.basis = basis;
    s.rational_only = basis.size() == 1 && basis[0] == 1;
    s.planes.assign(basis.size(),
                    std::vector<std::int64_t>(
                        static_cast<std::size_t>(s.m1) * s.m2, 0));
    BigInt magnitude_audit(0);
    for (int x = 0; x < s.m1; ++x) {
      for (int y = 0; y < s.m2; ++y) {
        for (const auto& [rad, coeff] : m(x, y).terms()) {
          std::size_t k = static_cast<std::size_t>(
              std::find(basis.begin(), basis.end(), rad) - basis.begin());
          BigInt scaled = coeff.num() * (denom / coeff.den());
          if (!scaled.fits_int64())
            throw resource_error("exact solver: scaled entry overflow");
          s.planes[k][s.cell(x, y)] = scaled.to_int64();
          magnitude_audit += scaled.abs() * BigInt(4);
        }
      }
    }
    if (magnitude_audit > BigInt(INT64_C(1) << 58))
      throw resource_error("exact solver: magnitude audit failed");
    s.sqrt_basis.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      s.sqrt_basis[k] = std::sqrt(static_cast<double>(basis[k]));
    return s;
  }

  ExactScalar to_exact(const std::vector<std::int64_t>& value_vec) const {
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (value_vec[k] != 0)
        terms.push_back({basis[k], Rational(value_vec[k], denom)});
    }
    return ExactScalar::canonicalize(terms);
  }
};

// Sign of sum_k c_k sqrt(basis_k): fast double path with a conservative
// error margin, exact fallback.
int combo_sign(const ScaledMatrix& sm, const std::int64_t* c) {
  if (sm.rational_only) return c[0] > 0 ? 1 : (c[0] < 0 ? -1 : 0);
  double val = 0.0, mag = 0.0;
  for (std::size_t k = 0; k < sm.basis.size(); ++k) {
    double t = static_cast<double>(c[k]) * sm.sqrt_basis[k];
    val += t;
    mag += std::fabs(t);
  }
  double err = mag * 1e-12 + 1e-300;
  if (val > err) return 1;
  if (val < -err) return -1;
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (std::size_t k = 0; k < sm.basis.size(); ++k)
    terms.push_back({sm.basis[k], Rational(c[k], 1)});
  return ExactScalar::canonicalize(terms).sign();
}

double combo_double(const ScaledMatrix& sm, const std::int64_t* c) {
  double val = 0.0;
  for (std::size_t k = 0; k < sm.basis.size(); ++k)
    val += static_cast<double>(c[k]) * sm.sqrt_basis[k];
  return val;
}

// Double value together with a certified absolute error bound.
std::pair<double, double> combo_double_err(const ScaledMatrix& sm,
                                           const std::int64_t* c) {
  double val = 0.0, mag = 0.0;
  for (std::size_t k = 0; k < sm.basis.size(); ++k) {
    double t = static_cast<double>(c[k]) * sm.sqrt_basis[k];
    val += t;
    mag += std::fabs(t);
  }
  return {val, 1e-12 * (mag + 1.0)};
}

// Compare two objective vectors exactly (sign of a - b).
int compare_vec(const ScaledMatrix& sm, const std::vector<std::int64_t>& a,
                const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return combo_sign(sm, d.data());
}

struct Enumerator {
  const ScaledMatrix& sm;
  const std::size_t k;
  // Column sums per plane: cols[k][y].
  std::vector<std::vector<std::int64_t>> cols;

  explicit Enumerator(const ScaledMatrix& s)
      : sm(s), k(s.basis.size()),
        cols(s.basis.size(), std::vector<std::int64_t>(s.m2, 0)) {}

  void init(const std::vector<std::int8_t>& a, int upto) {
    for (std::size_t p = 0; p < k; ++p) std::fill(cols[p].begin(), cols[p].end(), 0);
    for (int x = 0; x < upto; ++x) add_row(x, a[x]);
  }
  void add_row(int x, int sign) {
    for (std::size_t p = 0; p < k; ++p) {
      const std::int64_t* row = &sm.planes[p][sm.cell(x, 0)];
      std::int64_t* c = cols[p].data();
      if (sign > 0)
        for (int y = 0; y < sm.m2; ++y) c[y] += row[y];
      else
        for (int y = 0; y < sm.m2; ++y) c[y] -= row[y];
    }
  }
  void flip_row(int x, int new_sign) {
    // new contribution minus old = 2 * new_sign * row
    for (std::size_t p = 0; p < k; ++p) {
      const std::int64_t* row = &sm.planes[p][sm.cell(x, 0)];
      std::int64_t* c = cols[p].data();
      if (new_sign > 0)
        for (int y = 0; y < sm.m2; ++y) c[y] += 2 * row[y];
      else
        for (int y = 0; y < sm.m2; ++y) c[y] -= 2 * row[y];
    }
  }

  // Objective vector sum_y |column_y| and the maximizing b-signs.
  std::vector<std::int64_t> objective(std::vector<std::int8_t>* b_out) const {
    std::vector<std::int64_t> val(k, 0);
    std::vector<std::int64_t> c(k);
    if (b_out) b_out->assign(sm.m2, 1);
    for (int y = 0; y < sm.m2; ++y) {
      for (std::size_t p = 0; p < k; ++p) c[p] = cols[p][y];
      int s = combo_sign(sm, c.data());
      std::int8_t bs = s >= 0 ? std::int8_t(1) : std::int8_t(-1);
      if (b_out) (*b_out)[y] = bs;
      for (std::size_t p = 0; p < k; ++p) val[p] += bs * c[p];
    }
    return val;
  }
};

ExactSolveResult finish(const ScaledMatrix& sm,
                        const std::vector<std::int64_t>& best_vec,
                        const std::vector<std::int8_t>& best_a,
                        std::vector<std::int8_t> best_b,
                        std::uint64_t nodes, bool optimal) {
  ExactSolveResult r;
  r.value = sm.to_exact(best_vec);
  r.strategy.a = best_a;
  r.strategy.b = std::move(best_b);
  r.nodes_visited = nodes;
  r.optimal = optimal;
  return r;
}

}  // namespace

ExactSolveResult sdp1_bruteforce(const ExactMat& m) {
  if (m.rows() < 1 || m.cols() < 1)
    throw domain_error("sdp1_bruteforce: empty matrix");
  if (m.rows() > 22)
    throw resource_error("sdp1_bruteforce: m1 > 22 is out of reach");
  ScaledMatrix sm = ScaledMatrix::build(m);
  Enumerator en(sm);
  std::vector<std::int8_t> a(sm.m1, 1);
  en.init(a, sm.m1);
  std::vector<std::int8_t> b;
  std::vector<std::int64_t> best = en.objective(&b);
  std::vector<std::int8_t> best_a = a, best_b = b;
  const std::uint64_t total = sm.m1 > 1 ? (UINT64_C(1) << (sm.m1 - 1)) : 1;
  for (std::uint64_t t = 1; t < total; ++t) {
    // Gray code over a_2..a_m1 (a_1 pinned to +1).
    int bit = std::countr_zero(t);
    int x = bit + 1;
    a[x] = static_cast<std::int8_t>(-a[x]);
    en.flip_row(x, a[x]);
    std::vector<std::int64_t> val = en.objective(&b);
    auto [dv, ev] = combo_double_err(sm, val.data());
    auto [db, eb] = combo_double_err(sm, best.data());
    if (dv + ev > db - eb && compare_vec(sm, val, best) > 0) {
      best = val;
      best_a = a;
      best_b = b;
    }
  }
  return finish(sm, best, best_a, std::move(best_b), total, true);
}

namespace {

struct BnbContext {
  const ScaledMatrix& sm;
  std::vector<int> order;                   // branch order (row indices)
  std::vector<std::vector<double>> suffix;  // suffix[d][y]: upper bound on
                                            // sum over undecided rows of
                                            // |entry(x,y)|
  Enumerator en;
  std::vector<std::int8_t> a;      // in branch order
  std::vector<std::int64_t> best;  // objective vector
  std::vector<std::int8_t> best_a, best_b;
  double best_lo = -1e300;         // certified double lower bound on best
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  std::uint64_t checkpoint = 0;
  bool exhausted = false;

  explicit BnbContext(const ScaledMatrix& s) : sm(s), en(s) {}

  void refresh_best_lo() {
    auto [v, e] = combo_double_err(sm, best.data());
    best_lo = v - e;
  }

  double node_bound(int depth) const {
    // sum_y (|partial_y| + suffix[depth][y]), rounded up.
    double total = 0.0, mag = 0.0;
    for (int y = 0; y < sm.m2; ++y) {
      double v = 0.0;
      for (std::size_t p = 0; p < sm.basis.size(); ++p) {
        double t = static_cast<double>(en.cols[p][y]) * sm.sqrt_basis[p];
        v += t;
        mag += std::fabs(t);
      }
      total += std::fabs(v) + suffix[depth][y];
    }
    return total + 1e-12 * (mag + total + 1.0);
  }

  void leaf() {
    std::vector<std::int8_t> b;
    std::vector<std::int64_t> val = en.objective(&b);
    auto [dv, ev] = combo_double_err(sm, val.data());
    if (dv + ev <= best_lo) return;
    if (compare_vec(sm, val, best) > 0) {
      best = val;
      best_a = a;
      best_b = std::move(b);
      refresh_best_lo();
    }
  }

  void dfs(int depth) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (checkpoint && nodes % checkpoint == 0) {
      std::fprintf(stderr, "bnb checkpoint: %llu nodes, incumbent %.9g\n",
                   static_cast<unsigned long long>(nodes),
                   combo_double(sm, best.data()) / sm.denom);
      std::fflush(stderr);
    }
    if (depth == static_cast<int>(order.size())) {
      leaf();
      return;
    }
    if (node_bound(depth) <= best_lo) return;
    int x = order[depth];
    // Root level: sign pinned to +1 by the global flip symmetry.
    for (int s : {+1, -1}) {
      if (depth == 0 && s < 0) break;
      a[x] = static_cast<std::int8_t>(s);
      en.add_row(x, s);
      dfs(depth + 1);
      en.add_row(x, -s);  // subtract contribution
      if (exhausted) return;
    }
    a[x] = 0;
  }
};

ExactSolveResult bnb_impl(const ExactMat& m, const SolveOptions& opts) {
  ScaledMatrix sm = ScaledMatrix::build(m);
  BnbContext ctx(sm);
  ctx.budget = opts.node_budget;
  ctx.checkpoint = opts.checkpoint_interval;
  ctx.a.assign(sm.m1, 0);

  // Branch order: decreasing row L1 mass.
  std::vector<double> l1(sm.m1, 0.0);
  for (int x = 0; x < sm.m1; ++x) {
    std::vector<std::int64_t> c(sm.basis.size());
    for (int y = 0; y < sm.m2; ++y) {
      for (std::size_t p = 0; p < sm.basis.size(); ++p)
        c[p] = sm.planes[p][sm.cell(x, y)];
      l1[x] += std::fabs(combo_double(sm, c.data()));
    }
  }
  ctx.order.resize(sm.m1);
  std::iota(ctx.order.begin(), ctx.order.end(), 0);
  std::stable_sort(ctx.order.begin(), ctx.order.end(),
                   [&](int i, int j) { return l1[i] > l1[j]; });

  // Per-depth column suffix bounds (rounded up).
  ctx.suffix.assign(sm.m1 + 1, std::vector<double>(sm.m2, 0.0));
  for (int d = sm.m1 - 1; d >= 0; --d) {
    int x = ctx.order[d];
    for (int y = 0; y < sm.m2; ++y) {
      std::vector<std::int64_t> c(sm.basis.size());
      for (std::size_t p = 0; p < sm.basis.size(); ++p)
        c[p] = sm.planes[p][sm.cell(x, y)];
      double e = std::fabs(combo_double(sm, c.data()));
      ctx.suffix[d][y] = ctx.suffix[d + 1][y] + e * (1.0 + 1e-12) + 1e-300;
    }
  }

  // Incumbent: warm start if provided, otherwise a short heuristic run.
  Enumerator warm_en(sm);
  std::vector<std::int8_t> warm_a;
  if (opts.warm_start) {
    if (static_cast<int>(opts.warm_start->a.size()) != sm.m1)
      throw domain_error("warm start shape mismatch");
    warm_a = opts.warm_start->a;
  } else {
    OracleOptions oo;
    oo.n = 1;
    oo.restarts = 1000;
    oo.seed = 0x5eed;
    OracleResult h = heuristic_sdp(to_real(m), oo);
    warm_a = h.sign_strategy->a;
  }
  if (warm_a[ctx.order[0]] < 0)
    for (auto& s : warm_a) s = static_cast<std::int8_t>(-s);
  warm_en.init(warm_a, sm.m1);
  ctx.best = warm_en.objective(&ctx.best_b);
  ctx.best_a = warm_a;
  ctx.refresh_best_lo();

  ctx.dfs(0);

  return finish(sm, ctx.best, ctx.best_a, std::move(ctx.best_b), ctx.nodes,
                !ctx.exhausted);
}

}  // namespace

ExactSolveResult sdp1_branch_and_bound(const ExactMat& m,
                                       const SolveOptions& opts) {
  if (m.rows() < 1 || m.cols() < 1)
    throw domain_error("sdp1_branch_and_bound: empty matrix");
  return bnb_impl(m, opts);
}

ExactSolveResult sdp1_rectangular(const ExactMat& m, const SolveOptions& opts) {
  if (m.rows() < 1 || m.cols() < 1)
    throw domain_error("sdp1_rectangular: empty matrix");
  const bool transpose = m.cols() < m.rows();
  const ExactMat& work = transpose ? m.transposed() : m;
  if (work.rows() > opts.branch_cap)
    throw resource_error("sdp1_rectangular: branch side " +
                         std::to_string(work.rows()) + " exceeds cap " +
                         std::to_string(opts.branch_cap));
  ExactSolveResult r = bnb_impl(work, opts);
  if (transpose) std::swap(r.strategy.a, r.strategy.b);
  return r;
}

ExactSolveResult sdp1_rounded(const RealMat& m, const SolveOptions& opts) {
  double maxabs = 0.0;
  for (double v : m.data()) maxabs = std::max(maxabs, std::fabs(v));
  if (maxabs == 0.0) {
    ExactSolveResult r;
    r.strategy.a.assign(m.rows(), 1);
    r.strategy.b.assign(m.cols(), 1);
    return r;
  }
  // Scale so entries use ~44 bits (fewer for large shapes, keeping the
  // magnitude audit satisfied); the solve is exact for the rounded matrix.
  int bits = 44;
  const std::size_t cells = m.data().size();
  while (bits > 20 &&
         std::ldexp(static_cast<double>(cells), bits + 3) >=
             std::ldexp(1.0, 58))
    --bits;
  double scale = std::ldexp(1.0, bits) / maxabs;
  std::int64_t den = 1;
  while ((den << 1) <= static_cast<std::int64_t>(scale) &&
         den < (INT64_C(1) << bits))
    den <<= 1;
  ExactMat em(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      em(i, j) = ExactScalar(
          Rational(static_cast<std::int64_t>(
                       std::llround(m(i, j) * static_cast<double>(den))),
                   den));
  SolveOptions o2 = opts;
  return m.cols() >= m.rows() ? sdp1_rectangular(em, o2)
                              : sdp1_branch_and_bound(em, o2);
}

ExactScalar completion_bound(const ExactMat& m,
                             const std::vector<std::int8_t>& prefix) {
  if (static_cast<int>(prefix.size()) > m.rows())
    throw domain_error("completion_bound: prefix too long");
  ExactScalar total;
  for (int y = 0; y < m.cols(); ++y) {
    ExactScalar partial;
    for (std::size_t x = 0; x < prefix.size(); ++x) {
      if (prefix[x] > 0)
        partial += m(static_cast<int>(x), y);
      else
        partial -= m(static_cast<int>(x), y);
    }
    total += partial.abs();
    for (int x = static_cast<int>(prefix.size()); x < m.rows(); ++x)
      total += m(x, y).abs();
  }
  return total;
}

}  // namespace kgd
