#include "saddlegap/extremal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "saddlegap/conformal.hpp"

namespace saddlegap {

namespace {
using C = std::complex<double>;
using json = nlohmann::ordered_json;

constexpr int kLawsonIterations = 3000;
constexpr int kStagnationWindow = 40;

double green_interval(C z, double a, double b) {
  // g_{[a,b]}(z) = log |zeta + sqrt(zeta^2 - 1)|, branch with modulus >= 1.
  const C zeta = (2.0 * z - a - b) / (b - a);
  const C s = std::sqrt(zeta * zeta - 1.0);
  C u = zeta + s;
  if (std::abs(u) < 1.0) u = zeta - s;
  const double g = std::log(std::abs(u));
  return g > 0.0 ? g : 0.0;
}
}  // namespace

double green_symmetric_intervals(C lambda, double mu, double L) {
  if (mu == L) throw std::invalid_argument("degenerate interval set");
  return 0.5 * green_interval(lambda * lambda, mu * mu, L * L);
}

double green_upper_bound(C lambda, const SpectralSetDescriptor& set) {
  if (set.kind == SpectralSetDescriptor::Kind::SymmetricIntervals)
    return green_symmetric_intervals(lambda, set.mu, set.L);
  // The inscribed half-disc region upper-bounds the Green's function of
  // the full spectral range {|z| <= L, Re z >= mu}.
  const HalfDiscRegion region(set.mu, set.L);
  if (region.contains(lambda, 1e-12)) return 0.0;
  return green_halfdisc(lambda, region);
}

namespace {

double collar_green_max(const SpectralSetDescriptor& set) {
  const double mu = set.mu, L = set.L;
  std::vector<C> samples;
  const double dists[] = {0.25, 0.5, 0.75, 1.0};
  if (set.kind == SpectralSetDescriptor::Kind::HalfDisc) {
    const double y0 = std::sqrt(L * L - mu * mu);
    const double theta0 = std::acos(mu / L);
    for (int k = 0; k <= 40; ++k) {  // chord, outward normal (-1, 0)
      const double y = y0 * k / 40.0;
      for (double d : dists) samples.emplace_back(mu - d, y);
    }
    for (int k = 0; k <= 40; ++k) {  // arc, radial normal
      const double th = theta0 * k / 40.0;
      const C n(std::cos(th), std::sin(th));
      for (double d : dists) samples.push_back((L + d) * n);
    }
    // corner fans
    for (int k = 0; k <= 10; ++k) {
      const double th = theta0 + (M_PI - theta0) * k / 10.0;
      const C n(std::cos(th), std::sin(th));
      for (double d : dists) samples.push_back(C(mu, y0) + d * n);
    }
  } else {
    for (int k = 0; k <= 40; ++k) {  // above the right interval
      const double x = mu + (L - mu) * k / 40.0;
      for (double d : dists) samples.emplace_back(x, d);
    }
    for (int k = 1; k <= 20; ++k) {  // beyond the right endpoint
      samples.emplace_back(L + k / 20.0, 0.0);
    }
    for (int k = 0; k <= 20; ++k) {  // inside the central gap
      const double x = std::max(0.0, mu - 1.0) + (mu - std::max(0.0, mu - 1.0)) * k / 20.0;
      samples.emplace_back(x, 0.0);
    }
    // endpoint circles
    for (int k = 0; k < 24; ++k) {
      const C n = std::polar(1.0, 2.0 * M_PI * k / 24.0);
      samples.push_back(C(L, 0.0) + n);
      samples.push_back(C(mu, 0.0) + n);
    }
  }
  double g_max = 0.0;
  for (const C& z : samples) {
    if (set.contains(z, 0.0)) continue;
    try {
      g_max = std::max(g_max, green_upper_bound(z, set));
    } catch (const std::domain_error&) {
    }
  }
  return g_max;
}

// Upper-half boundary points at spacing <= delta, anchors exact; the full
// mesh is this path plus its mirror image.
std::vector<C> upper_boundary(const SpectralSetDescriptor& set, double delta) {
  const double mu = set.mu, L = set.L;
  std::vector<C> pts;
  if (set.kind == SpectralSetDescriptor::Kind::HalfDisc) {
    const double y0 = std::sqrt(L * L - mu * mu);
    const double theta0 = std::acos(mu / L);
    const int n_chord = std::max(1, static_cast<int>(std::ceil(y0 / delta)));
    for (int k = 0; k <= n_chord; ++k)
      pts.emplace_back(mu, y0 * k / n_chord);  // includes mu and the corner
    const int n_arc =
        std::max(1, static_cast<int>(std::ceil(L * theta0 / delta)));
    for (int k = 1; k <= n_arc; ++k) {  // k = 0 would repeat the corner
      const double th = theta0 * (1.0 - static_cast<double>(k) / n_arc);
      pts.push_back(L * C(std::cos(th), std::sin(th)));
    }
    // pin the real-axis anchor exactly
    pts.back() = C(L, 0.0);
  } else {
    if (mu == L) {
      pts.emplace_back(L, 0.0);
      return pts;
    }
    const int n = std::max(1, static_cast<int>(std::ceil((L - mu) / delta)));
    for (int k = 0; k <= n; ++k)
      pts.emplace_back(mu + (L - mu) * k / n, 0.0);
  }
  return pts;
}

BoundaryMesh assemble_mesh(const SpectralSetDescriptor& set, double delta) {
  BoundaryMesh mesh(set);
  mesh.delta = delta;
  const auto upper = upper_boundary(set, delta);
  for (const C& p : upper) {
    mesh.points.push_back(p);
    if (p.imag() > 0.0) mesh.points.push_back(std::conj(p));
  }
  if (set.kind == SpectralSetDescriptor::Kind::SymmetricIntervals)
    for (const C& p : upper) mesh.points.push_back(-p);
  return mesh;
}

double boundary_length(const SpectralSetDescriptor& set) {
  if (set.kind == SpectralSetDescriptor::Kind::SymmetricIntervals)
    return 2.0 * (set.L - set.mu);
  const double y0 = std::sqrt(set.L * set.L - set.mu * set.mu);
  return 2.0 * (y0 + set.L * std::acos(set.mu / set.L));
}

}  // namespace

BoundaryMesh BoundaryMesh::refined(int factor) const {
  if (factor < 1) throw std::invalid_argument("refinement factor must be >= 1");
  BoundaryMesh fine = assemble_mesh(parent, delta / factor);
  fine.epsilon = epsilon;
  fine.delta_relaxed = delta_relaxed;
  return fine;
}

BoundaryMesh build_mesh(const SpectralSetDescriptor& set, int T, double eps,
                        int max_points, bool strict) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps in (0,1)");

  if (set.kind == SpectralSetDescriptor::Kind::SymmetricIntervals &&
      set.mu == set.L) {
    BoundaryMesh mesh = assemble_mesh(set, 1.0);
    mesh.epsilon = eps;
    return mesh;
  }

  const double g_max = collar_green_max(set);
  const double delta_cap = set.diameter() / 8.0;
  double delta = std::min(eps * std::exp(-T * g_max), delta_cap);

  const double projected = boundary_length(set) / delta;
  if (projected > max_points) {
    if (strict)
      throw std::runtime_error(
          "mesh cap exceeded: the requested net needs delta = " +
          std::to_string(delta) + "; relax eps or raise the point cap");
    delta = boundary_length(set) / max_points;
    BoundaryMesh mesh = assemble_mesh(set, delta);
    mesh.epsilon = eps;
    mesh.delta_relaxed = true;
    return mesh;
  }
  BoundaryMesh mesh = assemble_mesh(set, delta);
  mesh.epsilon = eps;
  return mesh;
}

// ---------------------------------------------------------------------------
// Lawson solver
// ---------------------------------------------------------------------------

namespace {

// Polynomial basis evaluated on the mesh, with the monomial coefficients of
// each basis function carried along (for constraints at 0 and for the
// certificate).  Discrete Arnoldi orthonormalization keeps the weighted
// least-squares steps well conditioned at high degree.
struct MeshBasis {
  Eigen::MatrixXcd V;                       // M x n values on the mesh
  std::vector<std::vector<C>> monomials;    // per basis function
  int n = 0;

  Polynomial combine(const Eigen::VectorXcd& d) const {
    std::vector<C> c(monomials.back().size(), C(0.0));
    for (int t = 0; t < n; ++t)
      for (std::size_t j = 0; j < monomials[t].size(); ++j)
        c[j] += d(t) * monomials[t][j];
    return Polynomial(std::move(c), static_cast<int>(c.size()) - 1);
  }
};

MeshBasis build_basis(const std::vector<C>& points, int n) {
  const int M = static_cast<int>(points.size());
  MeshBasis basis;
  basis.n = n;
  Eigen::VectorXcd lam(M);
  for (int k = 0; k < M; ++k) lam(k) = points[k];

  if (M >= n + 2) {
    // Vandermonde with Arnoldi.
    basis.V.resize(M, n);
    basis.monomials.assign(n, {});
    Eigen::VectorXcd q = Eigen::VectorXcd::Constant(M, 1.0 / std::sqrt(double(M)));
    basis.V.col(0) = q;
    basis.monomials[0] = {C(1.0 / std::sqrt(double(M)))};
    for (int k = 0; k + 1 < n; ++k) {
      Eigen::VectorXcd v = lam.cwiseProduct(basis.V.col(k));
      std::vector<C> mono(basis.monomials[k].size() + 1, C(0.0));
      for (std::size_t j = 0; j < basis.monomials[k].size(); ++j)
        mono[j + 1] = basis.monomials[k][j];
      for (int pass = 0; pass < 2; ++pass) {  // reorthogonalize once
        for (int j = 0; j <= k; ++j) {
          const C h = basis.V.col(j).dot(v);
          v -= h * basis.V.col(j);
          for (std::size_t t = 0; t < basis.monomials[j].size(); ++t)
            mono[t] -= h * basis.monomials[j][t];
        }
      }
      const double hn = v.norm();
      if (hn < 1e-300) throw std::runtime_error("Arnoldi breakdown");
      basis.V.col(k + 1) = v / hn;
      for (auto& c : mono) c /= hn;
      basis.monomials[k + 1] = std::move(mono);
    }
    // pad every coefficient list to full length for combine()
    for (auto& m : basis.monomials) m.resize(n, C(0.0));
    return basis;
  }

  // Tiny mesh: plain scaled monomials; rank deficiency is handled by the
  // SVD least-squares below.
  double s = 1.0;
  for (const C& z : points) s = std::max(s, std::abs(z));
  basis.V.resize(M, n);
  basis.monomials.assign(n, std::vector<C>(n, C(0.0)));
  for (int t = 0; t < n; ++t) {
    basis.monomials[t][t] = std::pow(s, -t);
    for (int k = 0; k < M; ++k) basis.V(k, t) = std::pow(lam(k) / s, double(t));
  }
  return basis;
}

struct LawsonResult {
  Eigen::VectorXcd d;          // basis coefficients of the best polynomial
  Eigen::VectorXcd residuals;  // its values on the mesh
  Eigen::VectorXd weights;     // final Lawson weights
  double value = 0.0;          // max |residual|
  double dual_lower = 0.0;     // best sqrt(sum w |r|^2) seen
  bool converged = false;
};

// min over d with Cons d = b of max_k |(V d)_k| by Lawson reweighting.
LawsonResult lawson_minimax(const MeshBasis& basis,
                            const Eigen::MatrixXcd& Cons,
                            const Eigen::VectorXcd& b, double tol) {
  const int M = static_cast<int>(basis.V.rows());
  const int n = basis.n;
  const int k = static_cast<int>(Cons.rows());

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      Cons, Eigen::ComputeFullV | Eigen::ComputeThinU);
  svd.setThreshold(1e-12);
  const int rank = static_cast<int>(svd.rank());
  if (rank < k) throw std::runtime_error("degenerate normalization constraints");
  const Eigen::VectorXcd d_part = svd.solve(b);
  const Eigen::MatrixXcd N = svd.matrixV().rightCols(n - rank);

  const Eigen::VectorXcd vp = basis.V * d_part;   // M
  const Eigen::MatrixXcd VN = basis.V * N;        // M x (n-rank)

  LawsonResult out;
  Eigen::VectorXd w = Eigen::VectorXd::Constant(M, 1.0 / M);
  double best_value = std::numeric_limits<double>::infinity();
  double exponent = 1.0;
  int since_improvement = 0;

  for (int iter = 0; iter < kLawsonIterations; ++iter) {
    const Eigen::VectorXd sw = w.cwiseSqrt();
    const Eigen::MatrixXcd A = sw.asDiagonal() * VN;
    const Eigen::VectorXcd rhs = -(sw.asDiagonal() * vp);
    const Eigen::VectorXcd y = A.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXcd r = vp + VN * y;

    double vmax = 0.0, wsum = 0.0;
    for (int i = 0; i < M; ++i) {
      vmax = std::max(vmax, std::abs(r(i)));
      wsum += w(i) * std::norm(r(i));
    }
    out.dual_lower = std::max(out.dual_lower, std::sqrt(wsum));

    if (vmax < best_value) {
      best_value = vmax;
      out.d = d_part + N * y;
      out.residuals = r;
      out.weights = w;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    out.value = best_value;

    if (best_value <= tol * 1e-6 ||
        best_value - out.dual_lower <= tol * std::max(best_value, 1e-300)) {
      out.converged = true;
      break;
    }
    // Exchange-style safeguard: on stagnation, push weight harder onto the
    // current extremal points.
    if (since_improvement >= kStagnationWindow) {
      exponent = std::min(2.0, exponent + 0.5);
      since_improvement = 0;
    }
    double total = 0.0;
    for (int i = 0; i < M; ++i) {
      w(i) = std::max(w(i) * std::pow(std::abs(r(i)), exponent), 1e-300);
      total += w(i);
    }
    w /= total;
  }
  return out;
}

MinimaxCertificate run_minimax(const BoundaryMesh& mesh, int n_basis,
                               NormalizationClass cls, int T, double tol) {
  const MeshBasis basis = build_basis(mesh.points, n_basis);
  Eigen::MatrixXcd Cons;
  Eigen::VectorXcd b;
  if (cls == NormalizationClass::P) {
    Cons.resize(1, basis.n);
    b.resize(1);
    for (int t = 0; t < basis.n; ++t) Cons(0, t) = basis.monomials[t][0];
    b(0) = C(1.0);
  } else {
    Cons.resize(2, basis.n);
    b.resize(2);
    for (int t = 0; t < basis.n; ++t) {
      Cons(0, t) = basis.monomials[t][0];
      Cons(1, t) = basis.monomials[t].size() > 1 ? basis.monomials[t][1] : C(0.0);
    }
    b(0) = C(0.0);
    b(1) = C(1.0);
  }

  const LawsonResult res = lawson_minimax(basis, Cons, b, tol);

  MinimaxCertificate cert;
  cert.value = res.value;
  cert.inner_tolerance = std::max(0.0, res.value - res.dual_lower);
  cert.converged = res.converged;
  cert.polynomial = basis.combine(res.d);
  cert.mesh_size = mesh.size();
  {
    // Re-pin the normalization exactly (it holds up to rounding already).
    std::vector<C> c = cert.polynomial.coefficients();
    if (cls == NormalizationClass::P) {
      const C d0 = c[0];
      if (d0 != C(0.0))
        for (auto& ck : c) ck /= d0;
    } else if (c.size() > 1 && c[1] != C(0.0)) {
      c[0] = C(0.0);
      const C d1 = c[1];
      for (auto& ck : c) ck /= d1;
    }
    cert.polynomial = Polynomial(std::move(c));
  }
  if (cls == NormalizationClass::P) {
    const bool zero_outside = !mesh.parent.contains(C(0.0), 0.0);
    cert.lower_witness =
        zero_outside ? std::exp(-T * green_upper_bound(C(0.0), mesh.parent)) : 0.0;
  } else {
    cert.lower_witness = res.dual_lower;
  }
  return cert;
}

}  // namespace

MinimaxCertificate minimax_P(const BoundaryMesh& mesh, int T, double tol) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  return run_minimax(mesh, T + 1, NormalizationClass::P, T, tol);
}

MinimaxCertificate minimax_Q(const BoundaryMesh& mesh, int T, double tol) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  return run_minimax(mesh, T + 2, NormalizationClass::Q, T, tol);
}

double min_expected_sq_real(const SpectralMeasure& nu, int T) {
  // Rescale atoms to the unit disc; p is the same function either way, so
  // the minimum value is unchanged while the moment matrix stays tame.
  double s = 0.0;
  for (const auto& a : nu.atoms) s = std::max(s, std::abs(a.lambda));
  if (s == 0.0) s = 1.0;

  const int n = T + 1;
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : nu.atoms) {
    std::vector<C> pow(n);
    pow[0] = C(1.0);
    for (int t = 1; t < n; ++t) pow[t] = pow[t - 1] * (a.lambda / s);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        G(i, j) += a.weight * (pow[i] * std::conj(pow[j])).real();
  }
  if (n == 1) return G(0, 0);
  const Eigen::VectorXd g = G.block(1, 0, n - 1, 1);
  Eigen::MatrixXd Gp = G.block(1, 1, n - 1, n - 1);
  Gp.diagonal().array() += 1e-14 * Gp.trace() / (n - 1);
  const Eigen::VectorXd sol = Gp.ldlt().solve(g);
  const double value = G(0, 0) - g.dot(sol);
  return std::max(0.0, value);
}

DualMeasureResult dual_measure(const BoundaryMesh& mesh, int T, double tol) {
  const MinimaxCertificate primal = minimax_P(mesh, T, tol);
  const MeshBasis basis = build_basis(mesh.points, T + 1);
  Eigen::MatrixXcd Cons(1, basis.n);
  Eigen::VectorXcd b(1);
  for (int t = 0; t < basis.n; ++t) Cons(0, t) = basis.monomials[t][0];
  b(0) = C(1.0);
  const LawsonResult res = lawson_minimax(basis, Cons, b, tol);

  // Lawson weights at the fixed point are the optimal mixed strategy over
  // the mesh atoms; symmetrize with the conjugate and prune dust.
  const int M = mesh.size();
  std::vector<double> w(M);
  for (int i = 0; i < M; ++i) w[i] = res.weights(i);

  std::vector<int> conj_index(M, -1);
  for (int i = 0; i < M; ++i) {
    const C target = std::conj(mesh.points[i]);
    for (int j = 0; j < M; ++j)
      if (std::abs(mesh.points[j] - target) <= 1e-12) {
        conj_index[i] = j;
        break;
      }
  }
  for (int i = 0; i < M; ++i) {
    const int j = conj_index[i];
    if (j < 0)
      throw std::runtime_error("mesh is not conjugation-closed");
    if (j > i) {
      const double avg = 0.5 * (w[i] + w[j]);
      w[i] = w[j] = avg;
    }
  }

  SpectralMeasure nu;
  double kept = 0.0;
  for (int i = 0; i < M; ++i)
    if (w[i] > 1e-10) {
      nu.atoms.push_back({mesh.points[i], w[i]});
      kept += w[i];
    }
  for (auto& a : nu.atoms) a.weight /= kept;
  // re-pin exact pair equality after normalization rounding
  for (auto& a : nu.atoms)
    if (a.lambda.imag() < 0.0)
      for (auto& bb : nu.atoms)
        if (std::abs(bb.lambda - std::conj(a.lambda)) <= 1e-12)
          a.weight = bb.weight;
  double total = 0.0;
  for (const auto& a : nu.atoms) total += a.weight;
  for (auto& a : nu.atoms) a.weight /= total;

  DualMeasureResult out;
  out.nu = std::move(nu);
  out.minimax_value = primal.value;
  out.certified_value = std::sqrt(min_expected_sq_real(out.nu, T));
  out.gap = primal.value > 0.0
                ? 1.0 - out.certified_value / primal.value
                : 0.0;
  return out;
}

Polynomial symmetrize_polynomial(const Polynomial& p) { return p.real_part(); }

double bernstein_margin(const Polynomial& q, const SpectralSetDescriptor& set,
                        const BoundaryMesh& fine_mesh) {
  if (std::abs(q.eval(C(0.0))) > 1e-12)
    throw std::invalid_argument("polynomial must vanish at 0");
  const int deg = q.degree();
  if (deg < 2)
    throw std::invalid_argument("degree must be >= 2 (T = deg - 1 >= 1)");
  if (set.kind != SpectralSetDescriptor::Kind::HalfDisc || set.mu != 0.0)
    throw std::invalid_argument(
        "normal derivative at 0 is available for the mu = 0 half-disc only");
  const double T = deg - 1;
  const double dgdn = green_normal_derivative_at_zero(set.L);
  double sup = 0.0;
  for (const C& z : fine_mesh.points) sup = std::max(sup, std::abs(q.eval(z)));
  const double qp0 = std::abs(q.derivative().eval(C(0.0)));
  return qp0 / (0.5 * T * dgdn * sup);
}

std::string MinimaxCertificate::to_json() const {
  json j;
  j["value"] = value;
  j["lower_witness"] = lower_witness;
  j["gap"] = inner_tolerance;
  j["degree"] = polynomial.degree();
  j["mesh_size"] = mesh_size;
  j["converged"] = converged;
  json coeffs = json::array();
  for (const auto& c : polynomial.coefficients())
    coeffs.push_back(json::array({c.real(), c.imag()}));
  j["coefficients"] = coeffs;
  return j.dump(2);
}

}  // namespace saddlegap
