#ifndef KGD_BOUNDS_HPP
#define KGD_BOUNDS_HPP

#include <utility>

#include "kgd/certificates.hpp"
#include "kgd/exact_scalar.hpp"
#include "kgd/hull.hpp"
#include "kgd/oracle.hpp"
#include "kgd/solver.hpp"

namespace kgd {

/// Exact rational multiple of a power of pi.
struct PiValue {
  Rational coef;
  int pi_pow = 0;  // value = coef * pi^pi_pow

  RationalInterval interval() const;
  double to_double() const { return interval().mid_double(); }
  bool is_rational() const { return pi_pow == 0; }
};

/// gamma(d) = (2/d) * (Gamma((d+1)/2) / Gamma(d/2))^2: a rational multiple
/// of pi (d even) or of 1/pi (d odd).
PiValue gamma_ratio(int d);

/// The positive-semidefinite constant gamma(d) * pi / 2.
PiValue psd_constant(int d);

/// Closed-form lower bound on K_G(d->2): gamma(d)/gamma(2) rewritten with
/// central binomials; rational for even d, rational/pi^2 for odd d.
PiValue soa_lower_n2(int d);

/// Lower bound on the infinite-order constant:
/// sup_{0<lambda<1} (1 - rho)/max(rho, F_rho), rho = sqrt(2/pi) lambda
/// e^{-lambda^2/2}; grid sweep plus golden-section refinement.
std::pair<double, double> davie_bound(int grid = 4096,
                                      double refine_tol = 1e-10);

/// K_G(d->n) >= kg_d_lower / kg_n_upper.
double multiplicative_lower(double kg_d_lower, double kg_n_upper);

/// Upper-bound certificate 1/(alpha * etaA * etaB) from a rank-n membership
/// scaling alpha and shrinking factors; value is rounded up so the claim
/// stays valid.  Throws domain_error on nonpositive inputs.
BoundCertificate proposition1_upper(const Rational& alpha, double eta_a,
                                    double eta_b, int d, int n);

/// Lower-bound certificate <M,P>/SDP_n[M] from an exact solve (provenance
/// exact when the solve is optimal) or a heuristic value (never upgraded).
BoundCertificate ratio_certificate(const ExactScalar& m_dot_p,
                                   const ExactSolveResult& sdp_n, int d, int n,
                                   const std::string& witness);
BoundCertificate ratio_certificate_heuristic(const ExactScalar& m_dot_p,
                                             const OracleResult& sdp_n, int d,
                                             int n, const std::string& witness);

}  // namespace kgd

#endif  // KGD_BOUNDS_HPP
