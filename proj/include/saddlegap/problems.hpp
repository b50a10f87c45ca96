#ifndef SADDLEGAP_PROBLEMS_HPP
#define SADDLEGAP_PROBLEMS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace saddlegap {

/// Spectral range descriptor for the two matrix classes:
///   HalfDisc(mu, L)           = {z : |z| <= L, Re(z) >= mu}   (sigma of JH)
///   SymmetricIntervals(mu, L) = [-L, -mu] u [mu, L]            (sigma of H)
struct SpectralSetDescriptor {
  enum class Kind { HalfDisc, SymmetricIntervals };
  Kind kind;
  double mu;
  double L;

  SpectralSetDescriptor(Kind kind_, double mu_, double L_);

  bool contains(std::complex<double> z, double tol = 1e-10) const;
  double diameter() const;
};

/// Finitely supported, conjugation-invariant probability measure on a
/// spectral set.  Atom weights sum to 1.
struct SpectralMeasure {
  struct Atom {
    std::complex<double> lambda;
    double weight;
  };
  std::vector<Atom> atoms;

  /// Validates weights (positive, sum 1 within 1e-12), conjugation
  /// invariance, and membership in `set`.  Throws on violation.
  void validate(const SpectralSetDescriptor& set) const;

  /// E_{lambda ~ nu} |p(lambda)|^2 for arbitrary complex coefficients.
  double expected_sq(const class Polynomial& p) const;
};

/// Unconstrained quadratic saddle problem
///   f(x, y) = 1/2 (z - z*)^T H (z - z*),  H = [[A, B], [B^T, -C]],
/// with certified strong-convexity mu and smoothness L.
class QuadraticSaddleProblem {
public:
  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  const Eigen::MatrixXd& C() const { return C_; }
  const Eigen::VectorXd& z_star() const { return z_star_; }
  double mu() const { return mu_; }
  double L() const { return L_; }
  Eigen::Index dim_x() const { return A_.rows(); }
  Eigen::Index dim_y() const { return C_.rows(); }
  Eigen::Index dim() const { return dim_x() + dim_y(); }

  /// H = [[A, B], [B^T, -C]] (symmetric).
  Eigen::MatrixXd hessian() const;
  /// JH = [[A, B], [-B^T, C]] with J = diag(I, -I).
  Eigen::MatrixXd saddle_matrix() const;

  /// gradient = H (z - z*);  saddle operator F(z) = JH (z - z*).
  void saddle_gradient(const Eigen::VectorXd& z, Eigen::VectorXd& grad,
                       Eigen::VectorXd& F) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& z) const;
  Eigen::VectorXd saddle_operator(const Eigen::VectorXd& z) const;

  std::string to_json() const;
  static QuadraticSaddleProblem from_json(const std::string& text);

  friend QuadraticSaddleProblem make_problem(const Eigen::MatrixXd&,
                                             const Eigen::MatrixXd&,
                                             const Eigen::MatrixXd&,
                                             const Eigen::VectorXd&);

private:
  QuadraticSaddleProblem() = default;
  Eigen::MatrixXd A_, B_, C_;
  Eigen::VectorXd z_star_;
  double mu_ = 0.0;
  double L_ = 0.0;
};

/// Builds a problem from blocks (A, C symmetrized automatically), computing
/// certified mu = min eigenvalue of the diagonal blocks (clamped at 0) and
/// L = ||H||.  Throws std::invalid_argument if the problem is not
/// convex-concave (a diagonal-block eigenvalue below -1e-10).
QuadraticSaddleProblem make_problem(const Eigen::MatrixXd& A,
                                    const Eigen::MatrixXd& B,
                                    const Eigen::MatrixXd& C,
                                    const Eigen::VectorXd& z_star);

/// Eigenvalues of JH; each lies in HalfDisc(mu, L) up to 1e-8.
std::vector<std::complex<double>> eigenvalues_saddle_operator(
    const QuadraticSaddleProblem& problem);

/// Deterministic random instance with certified mu' in [mu, L] and L' <= L,
/// built from 2x2 saddle blocks with spectrum inside the valid range and a
/// random block-orthogonal conjugation.  The extremes are pinned so that
/// mu' = mu and L' = L up to eigensolver accuracy.
QuadraticSaddleProblem random_instance(double mu, double L, int d_x, int d_y,
                                       std::uint64_t seed);

/// Hard block-diagonal instance realizing the spectral measure nu:
/// for every polynomial p, ||p(JH)(z0 - z*)||^2 = E_nu |p|^2.
/// z0 is the origin; ||z0 - z*|| = 1.  A nonzero conjugation_seed applies a
/// random structure-preserving orthogonal conjugation (robustness testing;
/// the identity above is invariant under it).
struct HardInstance {
  QuadraticSaddleProblem problem;
  Eigen::VectorXd z0;
};
HardInstance hard_instance(const SpectralMeasure& nu,
                           const SpectralSetDescriptor& set,
                           std::uint64_t conjugation_seed = 0);

}  // namespace saddlegap

#endif
