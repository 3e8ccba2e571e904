#include "kgd/bounds.hpp"

#include <cmath>

#include "kgd/errors.hpp"

namespace kgd {

RationalInterval PiValue::interval() const {
  RationalInterval v{coef, coef};
  RationalInterval pi = RationalInterval::pi();
  for (int k = 0; k < pi_pow; ++k) v = v * pi;
  for (int k = 0; k > pi_pow; --k) v = v / pi;
  return v;
}

namespace {

BigInt factorial(int n) {
  BigInt f(1);
  for (int i = 2; i <= n; ++i) f = f * BigInt(i);
  return f;
}

BigInt binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt pow2(int e) { return BigInt(1) << static_cast<unsigned>(e); }

}  // namespace

PiValue gamma_ratio(int d) {
  if (d < 1) throw domain_error("gamma_ratio: d >= 1 required");
  PiValue out;
  if (d % 2 == 0) {
    // d = 2k: (1/k) * pi * ((2k)! / (4^k k! (k-1)!))^2
    int k = d / 2;
    Rational c(factorial(2 * k), pow2(2 * k) * factorial(k) * factorial(k - 1));
    out.coef = c * c / Rational(k);
    out.pi_pow = 1;
  } else {
    // d = 2k+1: (2/d) * (4^k (k!)^2 / (2k)!)^2 / pi
    int k = (d - 1) / 2;
    Rational c(pow2(2 * k) * factorial(k) * factorial(k), factorial(2 * k));
    out.coef = Rational(2, d) * c * c;
    out.pi_pow = -1;
  }
  return out;
}

PiValue psd_constant(int d) {
  PiValue g = gamma_ratio(d);
  g.coef = g.coef / Rational(2);
  g.pi_pow += 1;
  return g;
}

PiValue soa_lower_n2(int d) {
  if (d < 3) throw domain_error("soa_lower_n2: d >= 3 required");
  int k = d / 2;
  PiValue out;
  BigInt b = binomial(d - 1, k);
  if (d % 2 == 0) {
    out.coef = Rational(BigInt(d) * b * b, pow2(2 * d - 3));
    out.pi_pow = 0;
  } else {
    out.coef = Rational(pow2(2 * d + 1), BigInt(d) * b * b);
    out.pi_pow = -2;
  }
  return out;
}

namespace {

double davie_rho(double lambda) {
  return std::sqrt(2.0 / M_PI) * lambda * std::exp(-lambda * lambda / 2.0);
}

double davie_objective(double lambda) {
  double rho = davie_rho(lambda);
  // integral_lambda^inf e^{-x^2/2} dx = sqrt(pi/2) erfc(lambda/sqrt(2))
  double tail = 1.0 - 2.0 * std::erfc(lambda / std::sqrt(2.0));
  double f = (2.0 / M_PI) * std::exp(-lambda * lambda) + rho * tail;
  double denom = std::max(rho, f);
  return (1.0 - rho) / denom;
}

}  // namespace

std::pair<double, double> davie_bound(int grid, double refine_tol) {
  if (grid < 8) throw domain_error("davie_bound: grid too small");
  double best_l = 0.5, best_v = -1.0;
  for (int i = 1; i < grid; ++i) {
    double l = static_cast<double>(i) / grid;
    double v = davie_objective(l);
    if (v > best_v) {
      best_v = v;
      best_l = l;
    }
  }
  // Golden-section refinement around the best grid point.
  double a = std::max(1e-12, best_l - 2.0 / grid);
  double b = std::min(1.0 - 1e-12, best_l + 2.0 / grid);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = davie_objective(x1), f2 = davie_objective(x2);
  while (b - a > refine_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = davie_objective(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = davie_objective(x1);
    }
  }
  double l = (a + b) / 2.0;
  return {davie_objective(l), l};
}

double multiplicative_lower(double kg_d_lower, double kg_n_upper) {
  if (kg_n_upper <= 0)
    throw domain_error("multiplicative_lower: nonpositive upper bound");
  return kg_d_lower / kg_n_upper;
}

BoundCertificate proposition1_upper(const Rational& alpha, double eta_a,
                                    double eta_b, int d, int n) {
  if (alpha.sign() <= 0 || eta_a <= 0 || eta_b <= 0 || eta_a > 1.0 + 1e-12 ||
      eta_b > 1.0 + 1e-12)
    throw domain_error("proposition1_upper: inputs must be in (0, 1]");
  BoundCertificate cert;
  cert.d = d;
  cert.n = n;
  cert.lower = false;
  // Round up so the upper bound stays valid under the float division.
  cert.value = (1.0 / (alpha.to_double() * eta_a * eta_b)) * (1.0 + 1e-12);
  cert.provenance = Provenance::exact;
  cert.witness = "shrinking-factor combiner";
  cert.detail = json{{"alpha", to_json(alpha)},
                     {"eta_a", eta_a},
                     {"eta_b", eta_b}};
  return cert;
}

BoundCertificate ratio_certificate(const ExactScalar& m_dot_p,
                                   const ExactSolveResult& sdp_n, int d, int n,
                                   const std::string& witness) {
  if (sdp_n.value.sign() <= 0)
    throw domain_error("ratio_certificate: degenerate SDP value");
  BoundCertificate cert;
  cert.d = d;
  cert.n = n;
  cert.lower = true;
  cert.value_exact = m_dot_p / sdp_n.value;
  cert.value = cert.value_exact->to_double();
  cert.provenance =
      sdp_n.optimal ? Provenance::exact : Provenance::heuristic;
  cert.witness = witness;
  cert.detail = json{{"m_dot_p", to_json(m_dot_p)},
                     {"sdp_value", to_json(sdp_n.value)},
                     {"nodes_visited", sdp_n.nodes_visited},
                     {"proof", sdp_n.optimal ? "optimal" : "budget-exceeded"}};
  return cert;
}

BoundCertificate ratio_certificate_heuristic(const ExactScalar& m_dot_p,
                                             const OracleResult& sdp_n, int d,
                                             int n,
                                             const std::string& witness) {
  if (sdp_n.value <= 0)
    throw domain_error("ratio_certificate: degenerate heuristic value");
  BoundCertificate cert;
  cert.d = d;
  cert.n = n;
  cert.lower = true;
  cert.value = m_dot_p.to_double() / sdp_n.value;
  cert.provenance = Provenance::heuristic;
  cert.witness = witness;
  cert.detail = json{{"m_dot_p", to_json(m_dot_p)},
                     {"sdp_value", sdp_n.value},
                     {"restarts", sdp_n.restarts_used},
                     {"seed", sdp_n.seed}};
  return cert;
}

}  // namespace kgd
