#include "saddlegap/problems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "saddlegap/polynomial.hpp"

namespace saddlegap {

namespace {
using C = std::complex<double>;
using json = nlohmann::ordered_json;

Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ();
  // Fix signs so the factorization is unique given G.
  Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  return Q;
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Eigen::MatrixXd M(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) M(i, j) = rows[i][j].get<double>();
  return M;
}
}  // namespace

SpectralSetDescriptor::SpectralSetDescriptor(Kind kind_, double mu_, double L_)
    : kind(kind_), mu(mu_), L(L_) {
  // mu == L is allowed for interval sets only: the degenerate pair {+-L}.
  const bool ok = kind == Kind::SymmetricIntervals
                      ? (mu >= 0.0 && L >= mu && L > 0.0)
                      : (mu >= 0.0 && L > mu);
  if (!ok) throw std::invalid_argument("spectral set needs 0 <= mu <= L");
}

bool SpectralSetDescriptor::contains(C z, double tol) const {
  if (kind == Kind::HalfDisc)
    return std::abs(z) <= L + tol && z.real() >= mu - tol;
  if (std::abs(z.imag()) > tol) return false;
  const double a = std::abs(z.real());
  return a >= mu - tol && a <= L + tol;
}

double SpectralSetDescriptor::diameter() const {
  if (kind == Kind::SymmetricIntervals) return 2.0 * L;
  return std::max(2.0 * std::sqrt(L * L - mu * mu), L - mu);
}

void SpectralMeasure::validate(const SpectralSetDescriptor& set) const {
  if (atoms.empty()) throw std::invalid_argument("empty spectral measure");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!(a.weight > 0.0))
      throw std::invalid_argument("measure atom with non-positive weight");
    if (!set.contains(a.lambda, 1e-9))
      throw std::invalid_argument("measure atom outside the spectral set");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("measure weights do not sum to 1");
  for (const auto& a : atoms) {
    if (std::abs(a.lambda.imag()) == 0.0) continue;
    bool found = false;
    for (const auto& b : atoms)
      if (std::abs(b.lambda - std::conj(a.lambda)) < 1e-12 &&
          std::abs(b.weight - a.weight) < 1e-12) {
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("measure is not conjugation-invariant");
  }
}

double SpectralMeasure::expected_sq(const Polynomial& p) const {
  double acc = 0.0;
  for (const auto& a : atoms) acc += a.weight * std::norm(p.eval(a.lambda));
  return acc;
}

Eigen::MatrixXd QuadraticSaddleProblem::hessian() const {
  Eigen::MatrixXd H(dim(), dim());
  H.topLeftCorner(dim_x(), dim_x()) = A_;
  H.topRightCorner(dim_x(), dim_y()) = B_;
  H.bottomLeftCorner(dim_y(), dim_x()) = B_.transpose();
  H.bottomRightCorner(dim_y(), dim_y()) = -C_;
  return H;
}

Eigen::MatrixXd QuadraticSaddleProblem::saddle_matrix() const {
  Eigen::MatrixXd JH = hessian();
  JH.bottomRows(dim_y()) = -JH.bottomRows(dim_y());
  return JH;
}

void QuadraticSaddleProblem::saddle_gradient(const Eigen::VectorXd& z,
                                             Eigen::VectorXd& grad,
                                             Eigen::VectorXd& F) const {
  if (z.size() != dim()) throw std::invalid_argument("dimension mismatch");
  const Eigen::VectorXd d = z - z_star_;
  grad.resize(dim());
  grad.head(dim_x()) = A_ * d.head(dim_x()) + B_ * d.tail(dim_y());
  grad.tail(dim_y()) =
      B_.transpose() * d.head(dim_x()) - C_ * d.tail(dim_y());
  F = grad;
  F.tail(dim_y()) = -F.tail(dim_y());
}

Eigen::VectorXd QuadraticSaddleProblem::gradient(const Eigen::VectorXd& z) const {
  Eigen::VectorXd g, F;
  saddle_gradient(z, g, F);
  return g;
}

Eigen::VectorXd QuadraticSaddleProblem::saddle_operator(
    const Eigen::VectorXd& z) const {
  Eigen::VectorXd g, F;
  saddle_gradient(z, g, F);
  return F;
}

QuadraticSaddleProblem make_problem(const Eigen::MatrixXd& A,
                                    const Eigen::MatrixXd& B,
                                    const Eigen::MatrixXd& C,
                                    const Eigen::VectorXd& z_star) {
  if (A.rows() != A.cols() || C.rows() != C.cols())
    throw std::invalid_argument("A and C must be square");
  if (B.rows() != A.rows() || B.cols() != C.rows())
    throw std::invalid_argument("B dimensions inconsistent with A, C");
  if (z_star.size() != A.rows() + C.rows())
    throw std::invalid_argument("z* dimension inconsistent");

  QuadraticSaddleProblem p;
  p.A_ = 0.5 * (A + A.transpose());
  p.C_ = 0.5 * (C + C.transpose());
  p.B_ = B;
  p.z_star_ = z_star;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esA(p.A_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esC(p.C_);
  const double min_eig =
      std::min(esA.eigenvalues().minCoeff(), esC.eigenvalues().minCoeff());
  if (min_eig < -1e-10)
    throw std::invalid_argument(
        "not convex-concave: diagonal block eigenvalue " +
        std::to_string(min_eig));
  p.mu_ = std::max(0.0, min_eig);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esH(p.hessian());
  p.L_ = esH.eigenvalues().cwiseAbs().maxCoeff();
  return p;
}

std::vector<C> eigenvalues_saddle_operator(const QuadraticSaddleProblem& problem) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(problem.saddle_matrix(), false);
  std::vector<C> out(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    out[i] = es.eigenvalues()(i);
  return out;
}

QuadraticSaddleProblem random_instance(double mu, double L, int d_x, int d_y,
                                       std::uint64_t seed) {
  if (!(mu >= 0.0) || !(L >= mu) || !(L > 0.0))
    throw std::invalid_argument("need 0 <= mu <= L, L > 0");
  if (d_x < 1 || d_y < 1) throw std::invalid_argument("dims must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int m = std::min(d_x, d_y);

  for (int attempt = 0; attempt < 100; ++attempt) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(d_x);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(d_y);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);

    // Block 0 pins the spectral extremes: a = c = mu with |lambda| = L.
    a(0) = mu;
    c(0) = mu;
    b(0) = std::sqrt(std::max(0.0, L * L - mu * mu));
    for (int k = 1; k < m; ++k) {
      a(k) = mu + (L - mu) * unif(rng);
      c(k) = mu + (L - mu) * unif(rng);
      // ||2x2 block|| = |a-c|/2 + sqrt(((a+c)/2)^2 + b^2) <= L
      const double room = L - 0.5 * std::abs(a(k) - c(k));
      const double half_sum = 0.5 * (a(k) + c(k));
      const double b_max =
          std::sqrt(std::max(0.0, room * room - half_sum * half_sum));
      b(k) = b_max * unif(rng);
    }
    for (int k = m; k < d_x; ++k) a(k) = mu + (L - mu) * unif(rng);
    for (int k = m; k < d_y; ++k) c(k) = mu + (L - mu) * unif(rng);

    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(d_x, d_y);
    for (int k = 0; k < m; ++k) B(k, k) = b(k);

    const Eigen::MatrixXd Qx = random_orthogonal(d_x, rng);
    const Eigen::MatrixXd Qy = random_orthogonal(d_y, rng);
    const Eigen::MatrixXd A = Qx * a.asDiagonal() * Qx.transpose();
    const Eigen::MatrixXd Cm = Qy * c.asDiagonal() * Qy.transpose();
    const Eigen::MatrixXd Bm = Qx * B * Qy.transpose();

    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd z_star(d_x + d_y);
    for (Eigen::Index i = 0; i < z_star.size(); ++i) z_star(i) = gauss(rng);

    QuadraticSaddleProblem p = make_problem(A, Bm, Cm, z_star);
    if (p.mu() >= mu - 1e-10 && p.L() <= L + 1e-10) return p;
  }
  throw std::runtime_error("random_instance: resampling exhausted");
}

HardInstance hard_instance(const SpectralMeasure& nu,
                           const SpectralSetDescriptor& set,
                           std::uint64_t conjugation_seed) {
  nu.validate(set);

  // Atoms with Im >= 0; conjugates are realized by the same 2x2 block.
  std::vector<SpectralMeasure::Atom> upper;
  for (const auto& a : nu.atoms)
    if (a.lambda.imag() >= 0.0) upper.push_back(a);
  const int m = static_cast<int>(upper.size());

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(2 * m);
  Eigen::VectorXd z_star = Eigen::VectorXd::Zero(2 * m);

  for (int j = 0; j < m; ++j) {
    A(j, j) = upper[j].lambda.real();
    B(j, j) = upper[j].lambda.imag();
    const bool real_atom = upper[j].lambda.imag() == 0.0;
    const double c_j = real_atom ? std::sqrt(upper[j].weight / 2.0)
                                 : std::sqrt(upper[j].weight);
    z_star(j) = z0(j) - c_j;
    z_star(j + m) = z0(j + m) - c_j;
  }

  if (conjugation_seed != 0) {
    // Structure-preserving conjugation by Q = diag(Qx, Qy): the moment
    // identity depends only on the spectrum and on ||z0 - z*||.
    std::mt19937_64 rng(conjugation_seed);
    const Eigen::MatrixXd Qx = random_orthogonal(m, rng);
    const Eigen::MatrixXd Qy = random_orthogonal(m, rng);
    const Eigen::MatrixXd Ac = Qx * A * Qx.transpose();
    const Eigen::MatrixXd Bc = Qx * B * Qy.transpose();
    const Eigen::MatrixXd Cc = Qy * A * Qy.transpose();
    Eigen::VectorXd zs(2 * m);
    zs.head(m) = Qx * z_star.head(m);
    zs.tail(m) = Qy * z_star.tail(m);
    return HardInstance{make_problem(Ac, Bc, Cc, zs), std::move(z0)};
  }
  HardInstance out{make_problem(A, B, A, z_star), std::move(z0)};
  return out;
}

std::string QuadraticSaddleProblem::to_json() const {
  json j;
  j["A"] = matrix_to_json(A_);
  j["B"] = matrix_to_json(B_);
  j["C"] = matrix_to_json(C_);
  j["z_star"] = std::vector<double>(z_star_.data(), z_star_.data() + z_star_.size());
  j["mu"] = mu_;
  j["L"] = L_;
  return j.dump(2);
}

QuadraticSaddleProblem QuadraticSaddleProblem::from_json(const std::string& text) {
  const json j = json::parse(text);
  QuadraticSaddleProblem p;
  p.A_ = matrix_from_json(j.at("A"));
  p.B_ = matrix_from_json(j.at("B"));
  p.C_ = matrix_from_json(j.at("C"));
  const auto zs = j.at("z_star").get<std::vector<double>>();
  p.z_star_ = Eigen::Map<const Eigen::VectorXd>(zs.data(),
                                                static_cast<Eigen::Index>(zs.size()));
  p.mu_ = j.at("mu").get<double>();
  p.L_ = j.at("L").get<double>();
  return p;
}

}  // namespace saddlegap
