#include "kgd/diag_search.hpp"

#include <algorithm>
#include <set>

#include "kgd/errors.hpp"
#include "kgd/oracle.hpp"

namespace kgd {

namespace {

struct Piece {
  ExactScalar intercept;  // a^T P b
  std::int64_t slope;     // a . b  (value at t is intercept - t*slope)
  SignStrategy strategy;
};

Piece piece_of(const ExactMat& p, const SignStrategy& s) {
  Piece out;
  out.intercept = vertex_value(p, s);
  std::int64_t dot = 0;
  for (std::size_t i = 0; i < s.a.size(); ++i) dot += s.a[i] * s.b[i];
  out.slope = dot;
  out.strategy = s;
  return out;
}

ExactScalar ratio_at(const ExactMat& p, const ExactScalar& trace,
                     const ExactScalar& pp, const ExactScalar& lambda,
                     const ExactSolveResult& solve) {
  (void)p;
  ExactScalar num = pp - lambda * trace;
  return num / solve.value;
}

}  // namespace

DiagSearchResult diagonal_modification_search(const ExactMat& p,
                                              const Rational& lo,
                                              const Rational& hi, int steps,
                                              const SolveOptions& opts) {
  if (p.rows() != p.cols())
    throw domain_error("diagonal_modification_search: matrix must be square");
  if (steps < 1) throw domain_error("diagonal_modification_search: steps < 1");
  const int m = p.rows();
  ExactScalar pp = frob_dot(p, p);
  ExactScalar trace;
  for (int i = 0; i < m; ++i) trace += p(i, i);

  auto solve_at = [&](const ExactScalar& lambda) -> ExactSolveResult {
    return sdp1_branch_and_bound(diagonal_modification(p, lambda), opts);
  };

  // Heuristic fallback for instances beyond exact reach.
  bool heuristic = false;
  try {
    (void)solve_at(ExactScalar(lo));
  } catch (const resource_error&) {
    heuristic = true;
  }
  if (heuristic) {
    DiagSearchResult best;
    best.exact = false;
    bool first = true;
    for (int i = 0; i <= steps; ++i) {
      Rational t = lo + (hi - lo) * Rational(i) / Rational(steps);
      ExactScalar lambda{t};
      OracleOptions oo;
      oo.restarts = 2000;
      oo.seed = 0xd1a6;
      OracleResult h = heuristic_sdp(to_real(diagonal_modification(p, lambda)), oo);
      ExactScalar num = pp - lambda * trace;
      double r = num.to_double() / h.value;
      if (first || r > best.ratio.to_double()) {
        first = false;
        best.lambda = lambda;
        best.ratio = ExactScalar(rationalize(r, 1000000));
      }
    }
    return best;
  }

  // Exact path: evaluate the grid, then splice in the piece-change
  // breakpoints between neighbouring grid points.
  std::vector<std::pair<ExactScalar, ExactSolveResult>> candidates;
  std::vector<Piece> pieces;
  for (int i = 0; i <= steps; ++i) {
    Rational t = lo + (hi - lo) * Rational(i) / Rational(steps);
    ExactScalar lambda{t};
    ExactSolveResult res = solve_at(lambda);
    candidates.push_back({lambda, res});
    pieces.push_back(piece_of(p, res.strategy));
  }
  // Breakpoints: intersections of neighbouring optimal pieces, refined
  // recursively when the midpoint piece differs from both.
  struct Interval {
    ExactScalar lo_l;
    Piece lo_p;
    ExactScalar hi_l;
    Piece hi_p;
    int depth;
  };
  std::vector<Interval> stack;
  for (int i = 0; i < steps; ++i) {
    if (pieces[i].slope == pieces[i + 1].slope &&
        pieces[i].intercept == pieces[i + 1].intercept)
      continue;
    stack.push_back({candidates[i].first, pieces[i], candidates[i + 1].first,
                     pieces[i + 1], 0});
  }
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.depth > 12) continue;
    if (iv.lo_p.slope == iv.hi_p.slope) continue;  // parallel pieces
    ExactScalar tie = (iv.lo_p.intercept - iv.hi_p.intercept) /
                      ExactScalar(iv.lo_p.slope - iv.hi_p.slope);
    if (!(tie > iv.lo_l && tie < iv.hi_l)) continue;
    ExactSolveResult at_tie = solve_at(tie);
    candidates.push_back({tie, at_tie});
    Piece mid = piece_of(p, at_tie.strategy);
    // If the optimal piece at the tie differs from both endpoint pieces the
    // interval hides further breakpoints.
    ExactScalar val_lo = iv.lo_p.intercept - tie * ExactScalar(iv.lo_p.slope);
    ExactScalar val_mid = mid.intercept - tie * ExactScalar(mid.slope);
    if (val_mid > val_lo) {
      stack.push_back({iv.lo_l, iv.lo_p, tie, mid, iv.depth + 1});
      stack.push_back({tie, mid, iv.hi_l, iv.hi_p, iv.depth + 1});
    }
  }
  DiagSearchResult best;
  bool first = true;
  ExactScalar best_ratio;
  for (auto& [lambda, res] : candidates) {
    if (res.value.sign() <= 0) continue;
    ExactScalar r = ratio_at(p, trace, pp, lambda, res);
    if (first || r > best_ratio) {
      first = false;
      best_ratio = r;
      best.lambda = lambda;
      best.ratio = r;
      best.solve = res;
    }
  }
  if (first) throw domain_error("diagonal_modification_search: no candidate");
  best.exact = true;
  return best;
}

std::optional<ExactScalar> exact_lambda_near(const ExactMat& p, double lam_est,
                                             double delta,
                                             const SolveOptions& opts) {
  if (p.rows() != p.cols())
    throw domain_error("exact_lambda_near: matrix must be square");
  Rational lo = rationalize(lam_est - delta, 1 << 20);
  Rational hi = rationalize(lam_est + delta, 1 << 20);
  ExactSolveResult rl = sdp1_branch_and_bound(
      diagonal_modification(p, ExactScalar(lo)), opts);
  ExactSolveResult rh = sdp1_branch_and_bound(
      diagonal_modification(p, ExactScalar(hi)), opts);
  Piece a = piece_of(p, rl.strategy);
  Piece b = piece_of(p, rh.strategy);
  if (a.slope == b.slope) return std::nullopt;
  ExactScalar tie =
      (a.intercept - b.intercept) / ExactScalar(a.slope - b.slope);
  if (!(tie >= ExactScalar(lo) && tie <= ExactScalar(hi))) return std::nullopt;
  // Both pieces must actually be optimal at the tie.
  ExactSolveResult rt = sdp1_branch_and_bound(
      diagonal_modification(p, tie), opts);
  ExactScalar tie_val = a.intercept - tie * ExactScalar(a.slope);
  if (!(rt.value == tie_val)) return std::nullopt;
  return tie;
}

}  // namespace kgd
