#include "kgd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "kgd/errors.hpp"
#include "kgd/rng.hpp"

namespace kgd {

RealMat OracleResult::correlation() const {
  if (sign_strategy) return sign_strategy->outer();
  if (unit_strategy) return unit_strategy->correlation();
  throw domain_error("OracleResult: empty strategy");
}

double alternate_once(const RealMat& m, int n, RealMat& a, RealMat& b) {
  if (a.rows() != m.rows() || a.cols() != n)
    throw domain_error("alternate_once: a-shape mismatch");
  const int m1 = m.rows(), m2 = m.cols();
  if (b.rows() != m2 || b.cols() != n) b = RealMat(m2, n);
  // b_y = normalize(sum_x M_xy a_x); zero sums take the fallback vector.
  for (int y = 0; y < m2; ++y) {
    double norm2 = 0.0;
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int x = 0; x < m1; ++x) s += m(x, y) * a(x, k);
      b(y, k) = s;
      norm2 += s * s;
    }
    if (n == 1) {
      b(y, 0) = b(y, 0) >= 0.0 ? 1.0 : -1.0;  // sign(0) -> +1
    } else if (norm2 == 0.0) {
      b(y, 0) = 1.0;
      for (int k = 1; k < n; ++k) b(y, k) = 0.0;
    } else {
      double inv = 1.0 / std::sqrt(norm2);
      for (int k = 0; k < n; ++k) b(y, k) *= inv;
    }
  }
  // a_x = normalize(sum_y M_xy b_y); track the objective as we go.
  double value = 0.0;
  for (int x = 0; x < m1; ++x) {
    double norm2 = 0.0;
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int y = 0; y < m2; ++y) s += m(x, y) * b(y, k);
      a(x, k) = s;
      norm2 += s * s;
    }
    if (n == 1) {
      a(x, 0) = a(x, 0) >= 0.0 ? 1.0 : -1.0;
    } else if (norm2 == 0.0) {
      a(x, 0) = 1.0;
      for (int k = 1; k < n; ++k) a(x, k) = 0.0;
    } else {
      double inv = 1.0 / std::sqrt(norm2);
      for (int k = 0; k < n; ++k) a(x, k) *= inv;
    }
  }
  for (int x = 0; x < m1; ++x) {
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int y = 0; y < m2; ++y) s += m(x, y) * b(y, k);
      value += a(x, k) * s;
    }
  }
  return value;
}

namespace {

struct RestartOutcome {
  double value = -1e300;
  RealMat a, b;
  bool cap_hit = false;
};

RestartOutcome run_restart(const RealMat& m, int n, std::uint64_t seed,
                           std::uint64_t stream, long max_alternations,
                           double improvement_tol) {
  SplitRng rng(seed, stream);
  const int m1 = m.rows();
  RealMat a(m1, n), b;
  for (int x = 0; x < m1; ++x) {
    if (n == 1) {
      a(x, 0) = rng.next_sign();
    } else {
      double norm2 = 0.0;
      for (int k = 0; k < n; ++k) {
        a(x, k) = rng.next_gaussian();
        norm2 += a(x, k) * a(x, k);
      }
      if (norm2 == 0.0) {
        a(x, 0) = 1.0;
      } else {
        double inv = 1.0 / std::sqrt(norm2);
        for (int k = 0; k < n; ++k) a(x, k) *= inv;
      }
    }
  }
  RestartOutcome out;
  double prev = -1e300;
  for (long it = 0; it < max_alternations; ++it) {
    double value = alternate_once(m, n, a, b);
    if (n == 1 ? value <= prev : value - prev < improvement_tol) {
      out.value = std::max(value, prev);
      out.a = a;
      out.b = b;
      return out;
    }
    prev = value;
  }
  out.value = prev;
  out.a = a;
  out.b = b;
  out.cap_hit = true;
  return out;
}

SignStrategy to_sign_strategy(const RealMat& a, const RealMat& b) {
  SignStrategy s;
  s.a.resize(a.rows());
  s.b.resize(b.rows());
  for (int i = 0; i < a.rows(); ++i)
    s.a[i] = a(i, 0) >= 0 ? std::int8_t(1) : std::int8_t(-1);
  for (int j = 0; j < b.rows(); ++j)
    s.b[j] = b(j, 0) >= 0 ? std::int8_t(1) : std::int8_t(-1);
  return s;
}

// Deterministic preference between equal-value outcomes: lexicographically
// smallest strategy rounded to signs (rank one) or raw coordinates.
bool prefer(const RestartOutcome& cand, const RestartOutcome& best, int n) {
  if (cand.value != best.value) return cand.value > best.value;
  if (best.a.rows() == 0) return true;
  if (n == 1) {
    SignStrategy sc = to_sign_strategy(cand.a, cand.b);
    SignStrategy sb = to_sign_strategy(best.a, best.b);
    return sc < sb;
  }
  return cand.a.data() < best.a.data();
}

}  // namespace

OracleResult heuristic_sdp(const RealMat& m, const OracleOptions& opts) {
  if (opts.restarts < 1) throw domain_error("heuristic_sdp: restarts < 1");
  if (opts.n < 1) throw domain_error("heuristic_sdp: rank < 1");
  const int threads = std::max(1, opts.threads);
  std::vector<RestartOutcome> best_per_thread(threads);
  std::vector<char> cap_per_thread(threads, 0);
  auto work = [&](int t) {
    RestartOutcome best;
    bool cap = false;
    for (long r = t; r < opts.restarts; r += threads) {
      RestartOutcome cur = run_restart(m, opts.n, opts.seed,
                                       static_cast<std::uint64_t>(r),
                                       opts.max_alternations,
                                       opts.improvement_tol);
      cap = cap || cur.cap_hit;
      if (prefer(cur, best, opts.n)) best = std::move(cur);
    }
    best_per_thread[t] = std::move(best);
    cap_per_thread[t] = cap ? 1 : 0;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  RestartOutcome best;
  bool cap = false;
  for (int t = 0; t < threads; ++t) {
    if (best_per_thread[t].a.rows() == 0) continue;
    if (prefer(best_per_thread[t], best, opts.n))
      best = std::move(best_per_thread[t]);
    cap = cap || cap_per_thread[t];
  }
  OracleResult res;
  res.value = best.value;
  res.restarts_used = opts.restarts;
  res.seed = opts.seed;
  res.alternation_cap_hit = cap;
  if (opts.n == 1) {
    res.sign_strategy = to_sign_strategy(best.a, best.b);
    res.value = vertex_value(m, *res.sign_strategy);
  } else {
    UnitStrategy u;
    u.n = opts.n;
    u.a = best.a;
    u.b = best.b;
    res.unit_strategy = std::move(u);
  }
  return res;
}

OracleResult lmo(const RealMat& gradient, const OracleOptions& opts) {
  RealMat neg = gradient * -1.0;
  return heuristic_sdp(neg, opts);
}

}  // namespace kgd
