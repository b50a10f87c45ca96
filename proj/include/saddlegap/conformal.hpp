#ifndef SADDLEGAP_CONFORMAL_HPP
#define SADDLEGAP_CONFORMAL_HPP

#include <complex>

namespace saddlegap {

/// Half-disc {z : |z - mu| <= L - mu, Re(z) >= mu} with the two corners
/// at mu +- i(L - mu).  mu = 0, L = 1 is the unit half-disc.
struct HalfDiscRegion {
  double mu;
  double L;

  HalfDiscRegion(double mu_, double L_);

  double radius() const { return L - mu; }
  bool contains(std::complex<double> z, double tol = 0.0) const;
  /// Strict interior (where the exterior map is undefined).
  bool contains_strictly(std::complex<double> z, double tol = 1e-12) const;
};

/// Exterior conformal map of the unit half-disc onto the exterior of the
/// unit disc.  Defined for lambda outside the open half-disc (boundary
/// included, mapped to the unit circle).  The corners +-i are handled by
/// continuity.  Throws std::domain_error strictly inside.
std::complex<double> phi_omega(std::complex<double> lambda);

/// Green's function (pole at infinity) of the half-disc region:
/// log |phi_omega((lambda - mu)/(L - mu))|, clamped at 0 on the boundary.
double green_halfdisc(std::complex<double> lambda, const HalfDiscRegion& region);

/// Normal derivative of the Green's function of the radius-L half-disc at
/// the boundary point 0: the closed form 4/(3 sqrt(3) L).
double green_normal_derivative_at_zero(double L);

/// One-sided finite-difference estimate (step h with one Richardson level)
/// of the normal derivative at 0; used as a self-check oracle.
double green_normal_derivative_at_zero_fd(double L, double h = 1e-4);

/// Lower bound on the T-step rate of any symmetric Krylov algorithm on
/// kappa-conditioned problems: |phi_omega(-1/(kappa-1))|^{-T}.
double scsc_lower_rate(double kappa, int T);

/// T-step rate of slingshot GDA on kappa-conditioned problems:
/// 2 (k+1)^{T/2} (k-1)^{T/2} / ((k+1)^T + (k-1)^T), log-space.
/// Requires even T; returns 0 for kappa == 1, T >= 2.
double scsc_upper_rate(double kappa, int T);

}  // namespace saddlegap

#endif
