#ifndef SADDLEGAP_REPORT_HPP
#define SADDLEGAP_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "saddlegap/problems.hpp"

namespace saddlegap {

using Cell = std::variant<long long, double, std::string, bool>;

/// Tabular experiment output with a stable column order.  Serialization is
/// deterministic: doubles are printed with 12 significant digits.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool flagged = false;  // at least one row did not fully converge

  std::string to_csv() const;   // header line + one line per row
  std::string to_json() const;  // array of objects, columns in order
};

struct ExperimentConfig {
  /// One of: rates_scsc, rates_cc, extremal_sweep, hard_instance_run,
  /// conformal_validate.
  std::string experiment;
  double kappa = 10.0;  // rates_scsc, hard_instance_run (mu = L/kappa)
  double mu = 0.0;      // extremal_sweep
  double L = 1.0;
  std::vector<int> T_list{8};
  SpectralSetDescriptor::Kind set_kind = SpectralSetDescriptor::Kind::HalfDisc;
  char normalization = 'P';  // extremal_sweep: 'P' or 'Q'
  std::vector<std::string> methods{"gda_const", "extragradient", "ogda"};
  std::uint64_t seed = 0;
  double tol = 1e-3;
  double mesh_eps = 0.05;
};

/// Runs the configured experiment and assembles its rows.  Solver
/// non-convergence is reported through a `converged` column and the
/// report's `flagged` bit, never silently dropped.
Report run_experiment(const ExperimentConfig& config);

/// Writes the report ("csv" or "json") to `path`, or to stdout if `path`
/// is "-" or empty.  Throws on empty reports and unwritable paths.
void emit_report(const Report& report, const std::string& format,
                 const std::string& path);

}  // namespace saddlegap

#endif
