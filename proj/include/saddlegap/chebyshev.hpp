#ifndef SADDLEGAP_CHEBYSHEV_HPP
#define SADDLEGAP_CHEBYSHEV_HPP

#include <vector>

namespace saddlegap {

/// Degree-N Chebyshev polynomial of the first kind on [a, b],
/// normalized so |T_N| <= 1 on the interval.
struct ChebyshevSpec {
  int degree;  // N >= 1
  double a;
  double b;

  ChebyshevSpec(int degree_, double a_, double b_);
};

/// Roots of T_N on [a, b], descending order:
///   (a+b)/2 + (b-a)/2 * cos((2t+1) pi / (2N)),  t = 0..N-1.
std::vector<double> cheb_roots(const ChebyshevSpec& spec);

/// Value of T_N^{[a,b]} at a real point x.  Uses the cos form inside
/// [a, b] and the cosh form outside; never coefficient expansion.
double cheb_eval(const ChebyshevSpec& spec, double x);

/// |T_N^{[mu^2, L^2]}(0)| = ((k+1)^{2N} + (k-1)^{2N}) / (2 (k+1)^N (k-1)^N)
/// with k = L/mu, computed in log space as cosh(N log((k+1)/(k-1))).
/// Returns +infinity when mu == L (exact finite-step convergence).
double cheb_at_zero_scsc(int N, double mu, double L);

}  // namespace saddlegap

#endif
