#ifndef SADDLEGAP_EXTREMAL_HPP
#define SADDLEGAP_EXTREMAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "saddlegap/polynomial.hpp"
#include "saddlegap/problems.hpp"

namespace saddlegap {

/// Conjugation-closed discretization of the boundary of a spectral set.
/// Anchor points (interval endpoints, half-disc corners, the points mu and L)
/// are always present.
struct BoundaryMesh {
  std::vector<Complex> points;
  double delta = 0.0;       // realized spacing
  double epsilon = 0.0;     // requested sampling slack
  SpectralSetDescriptor parent;
  bool delta_relaxed = false;  // true if the net spacing was clamped to keep
                               // the point count below the configured cap

  explicit BoundaryMesh(SpectralSetDescriptor parent_) : parent(parent_) {}

  int size() const { return static_cast<int>(points.size()); }
  /// Same boundary, spacing divided by `factor` (reference mesh for checks).
  BoundaryMesh refined(int factor) const;
};

/// Green's function (pole at infinity) of [-L,-mu] u [mu,L] at a complex
/// point, via the degree-doubling identity g(z) = g_{[mu^2,L^2]}(z^2) / 2.
double green_symmetric_intervals(Complex lambda, double mu, double L);

/// Green's function of the spectral set itself (HalfDisc uses the exterior
/// map of the inscribed half-disc region, which upper-bounds it).
double green_upper_bound(Complex lambda, const SpectralSetDescriptor& set);

/// delta-net of the boundary with delta = min(eps * exp(-T g_max), diam/8),
/// where g_max is the maximum of the Green's function over the width-1
/// collar around the set.  If the net would exceed `max_points`, the spacing
/// is relaxed to meet the cap (strict = false, default) or a
/// std::runtime_error reporting the required delta is thrown (strict = true).
BoundaryMesh build_mesh(const SpectralSetDescriptor& set, int T, double eps,
                        int max_points = 4096, bool strict = false);

/// Certified solution of a discrete minimax problem on a mesh.
struct MinimaxCertificate {
  double value = 0.0;          // max over mesh of |polynomial|
  double lower_witness = 0.0;  // analytic lower bound on the continuum value
  double inner_tolerance = 0.0;
  bool converged = false;
  Polynomial polynomial;
  int mesh_size = 0;

  std::string to_json() const;
};

/// min over p with p(0)=1, deg <= T of max over mesh |p|, via Lawson
/// iteratively reweighted least squares on a discretely orthonormalized
/// (Arnoldi) basis.  lower_witness is the Bernstein-Walsh bound
/// exp(-T g(0)) when 0 lies outside the set, else 0.
MinimaxCertificate minimax_P(const BoundaryMesh& mesh, int T, double tol = 1e-3);

/// min over q with q(0)=0, q'(0)=1, deg <= T+1 of max over mesh |q|.
/// lower_witness is the Lawson dual bound on the mesh optimum.
MinimaxCertificate minimax_Q(const BoundaryMesh& mesh, int T, double tol = 1e-3);

struct DualMeasureResult {
  SpectralMeasure nu;
  double gap = 0.0;              // 1 - certified_value / minimax value
  double certified_value = 0.0;  // sqrt(min over real p in P_T of E_nu |p|^2)
  double minimax_value = 0.0;
};

/// Conjugation-invariant measure on mesh atoms approximately maximizing
/// min_p E_nu |p|^2 over P_T (Lawson multiplicative-weight exchange on the
/// atoms); the certified value is recomputed independently through the
/// real-coefficient moment matrix.
DualMeasureResult dual_measure(const BoundaryMesh& mesh, int T,
                               double tol = 1e-3);

/// min over real-coefficient p in P_T of E_nu |p(lambda)|^2, solved in
/// closed form through the moment matrix G_st = E Re(lambda^s conj(lambda)^t).
double min_expected_sq_real(const SpectralMeasure& nu, int T);

/// Coefficient-wise real part r = (p + conj-reflected p) / 2.
Polynomial symmetrize_polynomial(const Polynomial& p);

/// Bernstein-inequality ratio for a polynomial with the prescribed root 0:
///   |q'(0)| / ((T/2) * dg/dn(0) * max over fine_mesh |q|),  T = deg q - 1.
/// Requires q(0) = 0 (within 1e-12), deg q >= 2, and a half-disc set with
/// mu = 0 (where the normal derivative at 0 has the closed form).
double bernstein_margin(const Polynomial& q, const SpectralSetDescriptor& set,
                        const BoundaryMesh& fine_mesh);

}  // namespace saddlegap

#endif
