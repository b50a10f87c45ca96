#include "saddlegap/report.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "saddlegap/conformal.hpp"
#include "saddlegap/extremal.hpp"
#include "saddlegap/solvers.hpp"

namespace saddlegap {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<long long>(c))
    return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<double>(c)) return fmt(std::get<double>(c));
  if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
  return std::get<std::string>(c);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

Cell num(double x) { return Cell(x); }
Cell integer(long long x) { return Cell(x); }

Report rates_scsc(const ExperimentConfig& cfg) {
  Report r;
  r.columns = {"T",
               "slingshot_rate",
               "symmetric_lower_rate",
               "ratio",
               "log_rate_ratio",
               "asym_constant",
               "sym_constant",
               "lower_provenance"};
  const double sym_constant = 4.0 / (3.0 * std::sqrt(3.0));
  for (int T : cfg.T_list) {
    const double up = scsc_upper_rate(cfg.kappa, T);
    const double lo = scsc_lower_rate(cfg.kappa, T);
    r.rows.push_back({integer(T), num(up), num(lo), num(up / lo),
                      num(std::log(lo) / std::log(up)), num(1.0),
                      num(sym_constant), Cell(std::string("closed_form"))});
  }
  return r;
}

Report rates_cc(const ExperimentConfig& cfg) {
  Report r;
  r.columns = {"T",           "slingshot_rate", "minimax_q_value",
               "scaled_value", "asymptotic_target", "mesh_size",
               "certificate_gap", "converged",   "lower_provenance"};
  const double target = 1.5 * std::sqrt(3.0);
  const SpectralSetDescriptor set(SpectralSetDescriptor::Kind::HalfDisc, 0.0,
                                  cfg.L);
  for (int T : cfg.T_list) {
    const BoundaryMesh mesh = build_mesh(set, T + 1, cfg.mesh_eps);
    const MinimaxCertificate cert = minimax_Q(mesh, T, cfg.tol);
    if (!cert.converged) r.flagged = true;
    r.rows.push_back({integer(T), num(cfg.L / (T + 1)), num(cert.value),
                      num(cert.value * (T + 1) / cfg.L), num(target),
                      integer(cert.mesh_size), num(cert.inner_tolerance),
                      Cell(cert.converged),
                      Cell(std::string("lawson_solver"))});
  }
  return r;
}

Report extremal_sweep(const ExperimentConfig& cfg) {
  Report r;
  r.columns = {"T",         "class",     "value",     "lower_witness",
               "gap",       "degree",    "mesh_size", "converged",
               "lower_provenance"};
  const SpectralSetDescriptor set(cfg.set_kind, cfg.mu, cfg.L);
  const bool is_p = cfg.normalization == 'P';
  for (int T : cfg.T_list) {
    const BoundaryMesh mesh = build_mesh(set, is_p ? T : T + 1, cfg.mesh_eps);
    const MinimaxCertificate cert =
        is_p ? minimax_P(mesh, T, cfg.tol) : minimax_Q(mesh, T, cfg.tol);
    if (!cert.converged) r.flagged = true;
    r.rows.push_back(
        {integer(T), Cell(std::string(1, cfg.normalization)), num(cert.value),
         num(cert.lower_witness), num(cert.inner_tolerance),
         integer(cert.polynomial.degree()), integer(cert.mesh_size),
         Cell(cert.converged),
         Cell(std::string(is_p ? "bernstein_walsh_closed_form"
                               : "lawson_dual"))});
  }
  return r;
}

Report hard_instance_run(const ExperimentConfig& cfg) {
  Report r;
  r.columns = {"method",        "T",        "achieved_dist", "certified_floor",
               "minimax_value", "dual_gap", "achieved_over_floor",
               "converged",     "lower_provenance"};
  const double mu = cfg.L / cfg.kappa;
  const SpectralSetDescriptor set(SpectralSetDescriptor::Kind::HalfDisc, mu,
                                  cfg.L);
  for (int T : cfg.T_list) {
    const BoundaryMesh mesh = build_mesh(set, T, cfg.mesh_eps);
    const DualMeasureResult dm = dual_measure(mesh, T, cfg.tol);
    const bool certified = dm.gap <= 0.05;
    if (!certified) r.flagged = true;
    const HardInstance hard = hard_instance(dm.nu, set);
    const double floor = (1.0 - 2.0 * dm.gap) * dm.minimax_value;
    for (const std::string& name : cfg.methods) {
      const BaselineMethod m = baseline_from_name(name);
      const Trajectory traj = run_symmetric_baseline(
          m, hard.problem, baseline_default_step(m, mu, cfg.L), hard.z0, T);
      const double achieved = traj.dist_to_opt.back();
      r.rows.push_back({Cell(name), integer(T), num(achieved), num(floor),
                        num(dm.minimax_value), num(dm.gap),
                        num(achieved / floor), Cell(certified),
                        Cell(std::string("dual_measure"))});
    }
  }
  return r;
}

Report conformal_validate(const ExperimentConfig&) {
  Report r;
  r.columns = {"check", "value", "target", "deviation", "pass"};
  using Cx = std::complex<double>;

  double max_dev = 0.0;
  const int n = 1000;
  for (int k = 0; k < n; ++k) {  // semicircle then diameter, 500 each
    Cx z;
    if (k < n / 2)
      z = std::polar(1.0, -M_PI_2 + M_PI * (k + 0.5) / (n / 2));
    else
      z = Cx(0.0, -1.0 + 2.0 * (k - n / 2 + 0.5) / (n / 2));
    max_dev = std::max(max_dev, std::abs(std::abs(phi_omega(z)) - 1.0));
  }
  r.rows.push_back({Cell(std::string("boundary_modulus")), num(1.0 + max_dev),
                    num(1.0), num(max_dev), Cell(max_dev <= 1e-8)});

  const Cx at = phi_omega(Cx(-1.0, 0.0));
  const double dev = std::abs(at - Cx(-2.0, 0.0));
  r.rows.push_back({Cell(std::string("phi_at_minus_one")), num(at.real()),
                    num(-2.0), num(dev), Cell(dev <= 1e-10)});

  const double fd = green_normal_derivative_at_zero_fd(1.0);
  const double exact = green_normal_derivative_at_zero(1.0);
  const double fd_dev = std::abs(fd - exact);
  r.rows.push_back({Cell(std::string("normal_derivative_at_zero")), num(fd),
                    num(exact), num(fd_dev), Cell(fd_dev <= 1e-4)});

  for (const auto& row : r.rows)
    if (!std::get<bool>(row.back())) r.flagged = true;
  return r;
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg) {
  if (cfg.experiment == "rates_scsc") return rates_scsc(cfg);
  if (cfg.experiment == "rates_cc") return rates_cc(cfg);
  if (cfg.experiment == "extremal_sweep") return extremal_sweep(cfg);
  if (cfg.experiment == "hard_instance_run") return hard_instance_run(cfg);
  if (cfg.experiment == "conformal_validate") return conformal_validate(cfg);
  throw std::invalid_argument("unknown experiment: " + cfg.experiment);
}

std::string Report::to_csv() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << (c ? "," : "") << columns[c];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << cell_text(row[c]);
    os << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << "  {";
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? ", " : "") << '"' << json_escape(columns[c]) << "\": ";
      const Cell& cell = rows[i][c];
      if (std::holds_alternative<std::string>(cell))
        os << '"' << json_escape(std::get<std::string>(cell)) << '"';
      else
        os << cell_text(cell);
    }
    os << (i + 1 < rows.size() ? "},\n" : "}\n");
  }
  os << "]\n";
  return os.str();
}

void emit_report(const Report& report, const std::string& format,
                 const std::string& path) {
  if (report.rows.empty()) throw std::invalid_argument("empty report");
  std::string text;
  if (format == "csv")
    text = report.to_csv();
  else if (format == "json")
    text = report.to_json();
  else
    throw std::invalid_argument("format must be csv or json");
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace saddlegap
