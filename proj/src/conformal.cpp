#include "saddlegap/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace saddlegap {

namespace {
using C = std::complex<double>;
const C kI(0.0, 1.0);
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

HalfDiscRegion::HalfDiscRegion(double mu_, double L_) : mu(mu_), L(L_) {
  if (!(mu >= 0.0) || !(L > mu))
    throw std::invalid_argument("half-disc needs 0 <= mu < L");
}

bool HalfDiscRegion::contains(C z, double tol) const {
  return std::abs(z - C(mu, 0.0)) <= radius() + tol && z.real() >= mu - tol;
}

bool HalfDiscRegion::contains_strictly(C z, double tol) const {
  return std::abs(z - C(mu, 0.0)) < radius() - tol && z.real() > mu + tol;
}

C phi_omega(C lambda) {
  static const HalfDiscRegion unit(0.0, 1.0);
  if (unit.contains_strictly(lambda))
    throw std::domain_error("phi_omega undefined strictly inside the half-disc");
  // Corner -i: the Moebius ratio below blows up; take the limit w -> inf.
  if (lambda == C(0.0, -1.0)) return C(-0.5, -0.5 * kSqrt3);
  C ratio = (lambda - kI) / (lambda + kI);
  // Principal branch of the 2/3 power.  Its cut {ratio in (-inf, 0]} is the
  // image of the half-disc diameter; the exterior approaches the cut from
  // the arg = +pi side, so rounding noise that lands a diameter point a hair
  // below the axis must be snapped back up to keep the branch consistent.
  if (ratio.real() < 0.0 && std::signbit(ratio.imag()) &&
      -ratio.imag() <= 1e-13 * -ratio.real())
    ratio = C(ratio.real(), 0.0);
  const C w = std::pow(ratio, 2.0 / 3.0);
  const C num = (1.0 - w) - kSqrt3 * kI * (1.0 + w);
  const C den = 2.0 * (w - 1.0);
  return num / den;
}

double green_halfdisc(C lambda, const HalfDiscRegion& region) {
  const C scaled = (lambda - C(region.mu, 0.0)) / region.radius();
  const double g = std::log(std::abs(phi_omega(scaled)));
  return g > 0.0 ? g : 0.0;
}

double green_normal_derivative_at_zero(double L) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  return 4.0 / (3.0 * kSqrt3 * L);
}

double green_normal_derivative_at_zero_fd(double L, double h) {
  // g is one-sided at the boundary point 0; difference along the negative
  // real axis with one Richardson level: 2 D(h/2) - D(h).
  const HalfDiscRegion region(0.0, L);
  const auto D = [&](double step) {
    return green_halfdisc(C(-step, 0.0), region) / step;
  };
  return 2.0 * D(0.5 * h) - D(h);
}

double scsc_lower_rate(double kappa, int T) {
  if (!(kappa > 1.0)) throw std::invalid_argument("kappa must exceed 1");
  if (T < 0) throw std::invalid_argument("T must be nonnegative");
  const double g = std::log(std::abs(phi_omega(C(-1.0 / (kappa - 1.0), 0.0))));
  return std::exp(-static_cast<double>(T) * g);
}

double scsc_upper_rate(double kappa, int T) {
  if (!(kappa >= 1.0)) throw std::invalid_argument("kappa must be >= 1");
  if (T < 0 || T % 2 != 0) throw std::invalid_argument("T must be even >= 0");
  if (T == 0) return 1.0;
  if (kappa == 1.0) return 0.0;
  // 1 / cosh((T/2) log((k+1)/(k-1)))
  const double x = 0.5 * T * std::log((kappa + 1.0) / (kappa - 1.0));
  // 1/cosh(x) = 2 e^{-x} / (1 + e^{-2x}), safe for large x
  return 2.0 * std::exp(-x) / (1.0 + std::exp(-2.0 * x));
}

}  // namespace saddlegap
