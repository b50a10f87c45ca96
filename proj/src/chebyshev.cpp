#include "saddlegap/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace saddlegap {

ChebyshevSpec::ChebyshevSpec(int degree_, double a_, double b_)
    : degree(degree_), a(a_), b(b_) {
  if (degree < 1) throw std::invalid_argument("Chebyshev degree must be >= 1");
  if (!(a < b)) throw std::invalid_argument("Chebyshev interval needs a < b");
}

std::vector<double> cheb_roots(const ChebyshevSpec& spec) {
  const double mid = 0.5 * (spec.a + spec.b);
  const double half = 0.5 * (spec.b - spec.a);
  std::vector<double> roots(spec.degree);
  for (int t = 0; t < spec.degree; ++t)
    roots[t] = mid + half * std::cos((2.0 * t + 1.0) * M_PI /
                                     (2.0 * spec.degree));
  return roots;  // cos is decreasing in t, so this is descending
}

double cheb_eval(const ChebyshevSpec& spec, double x) {
  const double t = (2.0 * x - spec.a - spec.b) / (spec.b - spec.a);
  const double N = spec.degree;
  if (t >= -1.0 && t <= 1.0) return std::cos(N * std::acos(t));
  if (t > 1.0) return std::cosh(N * std::acosh(t));
  // t < -1: T_N(t) = (-1)^N T_N(-t)
  const double v = std::cosh(N * std::acosh(-t));
  return (spec.degree % 2 == 0) ? v : -v;
}

double cheb_at_zero_scsc(int N, double mu, double L) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(mu > 0.0) || !(L >= mu))
    throw std::invalid_argument("need 0 < mu <= L");
  if (mu == L) return std::numeric_limits<double>::infinity();
  const double kappa = L / mu;
  // ((k+1)^{2N} + (k-1)^{2N}) / (2 (k+1)^N (k-1)^N) = cosh(N log((k+1)/(k-1)))
  return std::cosh(N * std::log((kappa + 1.0) / (kappa - 1.0)));
}

}  // namespace saddlegap
