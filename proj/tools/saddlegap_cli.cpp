// Benchmark harness: separation tables, extremal certificates, hard-instance
// experiments, conformal self-checks.  Emits deterministic CSV/JSON.
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "saddlegap/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"saddle-point rate separation benchmarks"};
  app.require_subcommand(1);

  saddlegap::ExperimentConfig cfg;
  std::string out_path = "-";
  std::string format = "csv";
  std::string set_name = "halfdisc";
  std::string cls = "P";

  app.add_option("--seed", cfg.seed, "deterministic seed");
  app.add_option("--out", out_path, "output path ('-' for stdout)");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* scsc = app.add_subcommand(
      "rates-scsc", "slingshot rate vs symmetric lower bound, SCSC");
  scsc->add_option("--kappa", cfg.kappa, "condition number")->required();
  scsc->add_option("--T-list", cfg.T_list, "iteration counts")->required();

  auto* cc = app.add_subcommand(
      "rates-cc", "slingshot gradient-norm rate vs symmetric floor, CC");
  cc->add_option("--L", cfg.L, "smoothness constant")->required();
  cc->add_option("--T-list", cfg.T_list, "iteration counts")->required();
  cc->add_option("--tol", cfg.tol, "inner solver tolerance");

  auto* ext = app.add_subcommand("extremal", "minimax polynomial certificates");
  ext->add_option("--set", set_name, "spectral set")
      ->check(CLI::IsMember({"halfdisc", "intervals"}));
  ext->add_option("--mu", cfg.mu, "lower spectral parameter")->required();
  ext->add_option("--L", cfg.L, "upper spectral parameter")->required();
  ext->add_option("--class", cls, "normalization class")
      ->check(CLI::IsMember({"P", "Q"}));
  ext->add_option("--T-list", cfg.T_list, "degrees")->required();
  ext->add_option("--tol", cfg.tol, "inner solver tolerance");

  auto* hard = app.add_subcommand(
      "hard-instance", "certified lower-bound instance vs symmetric baselines");
  hard->add_option("--kappa", cfg.kappa, "condition number")->required();
  hard->add_option("--T", cfg.T_list, "iteration counts")->required();
  hard->add_option("--methods", cfg.methods,
                   "subset of gda_const, extragradient, ogda");
  hard->add_option("--tol", cfg.tol, "inner solver tolerance");

  auto* conf =
      app.add_subcommand("conformal-validate", "conformal map self-checks");

  CLI11_PARSE(app, argc, argv);

  if (scsc->parsed()) cfg.experiment = "rates_scsc";
  if (cc->parsed()) cfg.experiment = "rates_cc";
  if (ext->parsed()) {
    cfg.experiment = "extremal_sweep";
    cfg.set_kind = set_name == "halfdisc"
                       ? saddlegap::SpectralSetDescriptor::Kind::HalfDisc
                       : saddlegap::SpectralSetDescriptor::Kind::SymmetricIntervals;
    cfg.normalization = cls[0];
  }
  if (hard->parsed()) cfg.experiment = "hard_instance_run";
  if (conf->parsed()) cfg.experiment = "conformal_validate";

  try {
    const saddlegap::Report report = saddlegap::run_experiment(cfg);
    saddlegap::emit_report(report, format, out_path);
    return report.flagged ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
