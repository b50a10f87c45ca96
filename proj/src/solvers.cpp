#include "saddlegap/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "saddlegap/chebyshev.hpp"

namespace saddlegap {

namespace {
constexpr double kDivergenceThreshold = 1e12;

/// Largest first, then alternating toward the median.
std::vector<double> inside_out(std::vector<double> values) {
  std::sort(values.begin(), values.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  std::vector<double> out;
  out.reserve(values.size());
  std::size_t lo = 0, hi = values.size();
  bool from_front = true;
  while (lo < hi) {
    out.push_back(from_front ? values[lo++] : values[--hi]);
    from_front = !from_front;
  }
  return out;
}

void record(const QuadraticSaddleProblem& problem, const Eigen::VectorXd& z,
            Trajectory& traj) {
  traj.iterates.push_back(z);
  traj.dist_to_opt.push_back((z - problem.z_star()).norm());
  traj.grad_norm.push_back(problem.gradient(z).norm());
}

bool check_finite(const Eigen::VectorXd& z) {
  return z.allFinite() && z.norm() <= kDivergenceThreshold;
}
}  // namespace

bool StepSchedule::symmetric(double tol) const {
  for (const auto& s : steps)
    if (std::abs(s.alpha - s.beta) > tol) return false;
  return true;
}

std::string Trajectory::to_csv() const {
  std::ostringstream os;
  os << "t,dist_to_opt,grad_norm\n";
  char buf[96];
  for (std::size_t t = 0; t < iterates.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g\n", t, dist_to_opt[t],
                  grad_norm[t]);
    os << buf;
  }
  return os.str();
}

std::vector<double> slingshot_scsc_magnitudes(int T, double mu, double L) {
  if (T < 2 || T % 2 != 0) throw std::invalid_argument("T must be even >= 2");
  if (!(mu > 0.0) || !(L >= mu)) throw std::invalid_argument("need 0 < mu <= L");
  const auto roots = cheb_roots(ChebyshevSpec(T / 2, mu * mu, L * L));
  std::vector<double> h(roots.size());
  for (std::size_t t = 0; t < roots.size(); ++t) h[t] = 1.0 / std::sqrt(roots[t]);
  return inside_out(std::move(h));
}

StepSchedule slingshot_scsc_schedule(int T, double mu, double L) {
  StepSchedule s;
  for (double h : slingshot_scsc_magnitudes(T, mu, L)) {
    s.steps.push_back({h, -h});   // z_{2t+1} = z_{2t}   - h grad f
    s.steps.push_back({-h, h});   // z_{2t+2} = z_{2t+1} + h grad f
  }
  return s;
}

StepSchedule slingshot_cc_schedule(int T, double L) {
  if (T < 0 || T % 2 != 0) throw std::invalid_argument("T must be even >= 0");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  StepSchedule s;
  if (T == 0) return s;
  // Positive nonzero roots of the degree-(T+1) Chebyshev polynomial on
  // [-L, L]; the negative roots are their mirror images (rho_t = -rho_{T-t}).
  std::vector<double> h;
  for (int t = 0; t < T / 2; ++t)
    h.push_back(1.0 / (L * std::cos((2.0 * t + 1.0) * M_PI / (2.0 * T + 2.0))));
  for (double ht : inside_out(std::move(h))) {
    s.steps.push_back({ht, -ht});
    s.steps.push_back({-ht, ht});
  }
  return s;
}

Trajectory run_gda(const QuadraticSaddleProblem& problem,
                   const StepSchedule& schedule, const Eigen::VectorXd& z0) {
  if (z0.size() != problem.dim()) throw std::invalid_argument("z0 dimension mismatch");
  Trajectory traj;
  Eigen::VectorXd z = z0;
  record(problem, z, traj);
  for (const auto& step : schedule.steps) {
    const Eigen::VectorXd g = problem.gradient(z);
    z.head(problem.dim_x()) -= step.alpha * g.head(problem.dim_x());
    z.tail(problem.dim_y()) += step.beta * g.tail(problem.dim_y());
    if (!check_finite(z)) {
      traj.diverged = true;
      break;
    }
    record(problem, z, traj);
  }
  return traj;
}

BaselineMethod baseline_from_name(const std::string& name) {
  if (name == "gda_const") return BaselineMethod::GdaConst;
  if (name == "extragradient") return BaselineMethod::Extragradient;
  if (name == "ogda") return BaselineMethod::Ogda;
  throw std::invalid_argument("unknown baseline method: " + name);
}

std::string baseline_name(BaselineMethod m) {
  switch (m) {
    case BaselineMethod::GdaConst: return "gda_const";
    case BaselineMethod::Extragradient: return "extragradient";
    case BaselineMethod::Ogda: return "ogda";
  }
  return "?";
}

double baseline_default_step(BaselineMethod m, double mu, double L) {
  if (m == BaselineMethod::GdaConst) return mu / (L * L);
  return 1.0 / (2.0 * L);
}

Trajectory run_symmetric_baseline(BaselineMethod method,
                                  const QuadraticSaddleProblem& problem,
                                  double step, const Eigen::VectorXd& z0,
                                  int T) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (z0.size() != problem.dim()) throw std::invalid_argument("z0 dimension mismatch");
  Trajectory traj;
  Eigen::VectorXd z = z0;
  record(problem, z, traj);
  Eigen::VectorXd F_prev = problem.saddle_operator(z);  // F(z_{-1}) := F(z_0)
  for (int t = 0; t < T; ++t) {
    const Eigen::VectorXd F = problem.saddle_operator(z);
    switch (method) {
      case BaselineMethod::GdaConst:
        z -= step * F;
        break;
      case BaselineMethod::Extragradient: {
        const Eigen::VectorXd mid = z - step * F;
        z -= step * problem.saddle_operator(mid);
        break;
      }
      case BaselineMethod::Ogda:
        z += -2.0 * step * F + step * F_prev;
        break;
    }
    F_prev = F;
    if (!check_finite(z)) {
      traj.diverged = true;
      break;
    }
    record(problem, z, traj);
  }
  return traj;
}

Polynomial baseline_polynomial(BaselineMethod method, double step, int T) {
  const double s = step;
  switch (method) {
    case BaselineMethod::GdaConst: {
      Polynomial p = Polynomial::one();
      const Polynomial factor({Complex(1.0), Complex(-s)}, 1);
      for (int t = 0; t < T; ++t) p = p * factor;
      return p;
    }
    case BaselineMethod::Extragradient: {
      Polynomial p = Polynomial::one();
      const Polynomial factor({Complex(1.0), Complex(-s), Complex(s * s)}, 2);
      for (int t = 0; t < T; ++t) p = p * factor;
      return p;
    }
    case BaselineMethod::Ogda: {
      Polynomial prev = Polynomial::one();  // p_{-1}
      Polynomial cur = Polynomial::one();   // p_0
      const Polynomial lam({Complex(0.0), Complex(1.0)}, 1);
      for (int t = 0; t < T; ++t) {
        Polynomial next = cur + lam * (Complex(-2.0 * s) * cur + Complex(s) * prev);
        prev = cur;
        cur = next;
      }
      return cur;
    }
  }
  throw std::logic_error("unreachable");
}

Eigen::VectorXcd apply_symmetric_polynomial(const Polynomial& p,
                                            const QuadraticSaddleProblem& problem,
                                            const Eigen::VectorXd& z0) {
  if (std::abs(p.eval(Complex(0.0)) - Complex(1.0)) > 1e-12)
    throw std::invalid_argument("polynomial must satisfy p(0) = 1");
  const Eigen::MatrixXcd JH = problem.saddle_matrix().cast<Complex>();
  const Eigen::VectorXcd d = (z0 - problem.z_star()).cast<Complex>();
  const auto& c = p.coefficients();
  Eigen::VectorXcd acc = c.back() * d;
  for (int t = static_cast<int>(c.size()) - 2; t >= 0; --t)
    acc = JH * acc + c[t] * d;
  return problem.z_star().cast<Complex>() + acc;
}

Eigen::VectorXd apply_asymmetric_polynomial(const std::vector<Complex>& roots,
                                            const QuadraticSaddleProblem& problem,
                                            const Eigen::VectorXd& z0) {
  if (z0.size() != problem.dim()) throw std::invalid_argument("z0 dimension mismatch");
  std::vector<double> real_roots;
  std::vector<Complex> complex_pairs;  // one representative per conjugate pair
  std::vector<Complex> waiting;        // complex roots awaiting a partner
  for (const auto& r : roots) {
    if (r == Complex(0.0)) throw std::invalid_argument("zero root");
    if (r.imag() == 0.0) {
      real_roots.push_back(r.real());
      continue;
    }
    auto it = std::find_if(waiting.begin(), waiting.end(), [&](const Complex& q) {
      return std::abs(q - std::conj(r)) <= 1e-12 * std::abs(r);
    });
    if (it != waiting.end()) {
      complex_pairs.push_back(*it);
      waiting.erase(it);
    } else {
      waiting.push_back(r);
    }
  }
  if (!waiting.empty())
    throw std::invalid_argument(
        "complex roots must arrive conjugate-paired to keep iterates real");

  Eigen::VectorXd z = z0;
  // Real root r: one plain GDA step with stepsize 1/r in both blocks,
  // i.e. z <- z - (1/r) grad f(z), so z - z* picks up (I - H/r).
  for (double r : real_roots) z -= (1.0 / r) * problem.gradient(z);
  // Conjugate pair (r, conj r): fuse into the real quadratic factor
  // I - 2 Re(1/r) H + |1/r|^2 H^2, realized with two gradient calls.
  for (const auto& r : complex_pairs) {
    const double lin = 2.0 * (1.0 / r).real();
    const double quad = std::norm(1.0 / r);
    const Eigen::VectorXd g = problem.gradient(z);
    const Eigen::VectorXd Hg = problem.gradient(z + g) - g;
    z += -lin * g + quad * Hg;
  }
  return z;
}

}  // namespace saddlegap
