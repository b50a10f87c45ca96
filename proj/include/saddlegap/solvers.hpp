#ifndef SADDLEGAP_SOLVERS_HPP
#define SADDLEGAP_SOLVERS_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "saddlegap/polynomial.hpp"
#include "saddlegap/problems.hpp"

namespace saddlegap {

/// Per-iteration stepsize pairs (alpha_t, beta_t) for GDA:
///   x_{t+1} = x_t - alpha_t grad_x f,  y_{t+1} = y_t + beta_t grad_y f.
struct StepSchedule {
  struct Pair {
    double alpha;
    double beta;
  };
  std::vector<Pair> steps;

  int length() const { return static_cast<int>(steps.size()); }
  bool symmetric(double tol = 0.0) const;
};

struct Trajectory {
  std::vector<Eigen::VectorXd> iterates;  // z_0 .. z_T
  std::vector<double> dist_to_opt;        // ||z_t - z*||
  std::vector<double> grad_norm;          // ||grad f(z_t)||
  bool diverged = false;

  const Eigen::VectorXd& final_iterate() const { return iterates.back(); }
  /// CSV rows "t,dist_to_opt,grad_norm" with a header line.
  std::string to_csv() const;
};

/// Slingshot schedule for mu-SCSC problems (T even >= 2):
/// h_t = r_t^{-1/2} for the roots r_t of the degree-T/2 Chebyshev polynomial
/// on [mu^2, L^2], arranged as alpha_{2t} = -beta_{2t} = -alpha_{2t+1}
/// = beta_{2t+1} = h_t.  Pairs are ordered inside-out (largest |h| first,
/// then alternating toward the median); any order is equivalent in exact
/// arithmetic.
StepSchedule slingshot_scsc_schedule(int T, double mu, double L);

/// Slingshot schedule for convex-concave problems (T even >= 0):
/// alpha_t = -beta_t = h_t with {1/h_t} the T nonzero roots of the
/// degree-(T+1) Chebyshev polynomial on [-L, L]; +-pairs adjacent,
/// inside-out ordering.
StepSchedule slingshot_cc_schedule(int T, double L);

/// The magnitudes h_t of a slingshot SCSC schedule (one per +- pair).
std::vector<double> slingshot_scsc_magnitudes(int T, double mu, double L);

Trajectory run_gda(const QuadraticSaddleProblem& problem,
                   const StepSchedule& schedule, const Eigen::VectorXd& z0);

enum class BaselineMethod { GdaConst, Extragradient, Ogda };
BaselineMethod baseline_from_name(const std::string& name);
std::string baseline_name(BaselineMethod m);
/// Standard convergent default stepsizes: mu/L^2 for constant GDA,
/// 1/(2L) for extragradient and OGDA.
double baseline_default_step(BaselineMethod m, double mu, double L);

Trajectory run_symmetric_baseline(BaselineMethod method,
                                  const QuadraticSaddleProblem& problem,
                                  double step, const Eigen::VectorXd& z0,
                                  int T);

/// The polynomial p_T with z_T - z* = p_T(JH)(z0 - z*) implied by the
/// baseline recurrence (degree T, or 2T for extragradient).
Polynomial baseline_polynomial(BaselineMethod method, double step, int T);

/// z* + p(JH)(z0 - z*) via Horner on the matrix action.
/// Requires p(0) = 1 within 1e-12.  Complex-valued for complex p.
Eigen::VectorXcd apply_symmetric_polynomial(const Polynomial& p,
                                            const QuadraticSaddleProblem& problem,
                                            const Eigen::VectorXd& z0);

/// GDA realization of p(H) for p = prod_k (1 - lambda/r_k) given by its
/// nonzero roots.  Complex roots must arrive conjugate-paired; each pair is
/// fused into a real quadratic factor so iterates stay real.
/// Returns z_T with z_T - z* = p(H)(z0 - z*).
Eigen::VectorXd apply_asymmetric_polynomial(const std::vector<Complex>& roots,
                                            const QuadraticSaddleProblem& problem,
                                            const Eigen::VectorXd& z0);

}  // namespace saddlegap

#endif
