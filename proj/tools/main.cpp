#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_common_flags(CLI::App& app, tlent::cli::RunConfig& cfg) {
  app.add_option("--d-min", cfg.d_min, "Lower end of the d grid");
  app.add_option("--d-max", cfg.d_max, "Upper end of the d grid");
  app.add_option("--steps", cfg.steps, "Number of grid points (>= 2)");
  app.add_option("--q", cfg.q, "Deformation parameter q > 0");
  app.add_option("--phi", cfg.phi, "Flip-flop phase");
  app.add_option("--B", cfg.B, "Uniform field B = (mu1+mu2)/2 >= 0");
  app.add_option("--J", cfg.J, "Field inhomogeneity J = (mu1-mu2)/2");
  app.add_option("--g", cfg.g, "Sz-Sz coupling");
  app.add_option("--gamma", cfg.gamma, "Initial-state mixing weight in (0, 1]");
  app.add_option("--alpha", cfg.alpha, "Initial-state angle");
  app.add_option("--t-max", cfg.t_max, "End of the time window");
  app.add_option("--out", cfg.out, "Write CSV to PATH instead of stdout");
  app.add_option("--tolerance", cfg.tolerance, "Residual tolerance for checks");
  app.add_flag("--gnuplot", cfg.gnuplot, "Also write PATH.gp next to --out");
}

}  // namespace

int main(int argc, char** argv) {
  tlent::cli::RunConfig cfg;
  CLI::App app{"Temperley-Lieb representations, Yang-Baxter spin model and entanglement"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run identity checks and print residuals");
  verify->add_option("--family", cfg.family, "all | max-entangled | two-dim | three-dim");
  verify->add_option("--n", cfg.n, "Site dimension for max-entangled");
  verify->add_option("--branch", cfg.branch, "Branch (1-3) for three-dim");

  auto* fig2 = app.add_subcommand("fig2", "Concurrence of the projective states versus d");
  auto* fig3 = app.add_subcommand("fig3", "Zero-temperature maximum concurrence versus d");
  auto* fig4 = app.add_subcommand("fig4", "Critical temperature versus d");
  auto* fig5 = app.add_subcommand("fig5", "Concurrence dynamics and sudden-death windows");
  fig5->add_option("--d-list", cfg.d_list, "Comma-separated d values")->delimiter(',');
  fig5->add_option("--t-steps", cfg.t_steps, "Number of time samples");
  fig5->add_option("--windows-out", cfg.windows_out, "Window summary CSV path");

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter of one quantity");
  sweep->add_option("--quantity", cfg.quantity,
                    "c_n2 | c_n3 | c_max | tc | thermal_c | zero_t | esd_c | evolved_c")
      ->required();
  sweep->add_option("--over", cfg.over, "d | T | B | J | g | phi | t | gamma | alpha")->required();
  sweep->add_option("--min", cfg.min, "Sweep start")->required();
  sweep->add_option("--max", cfg.max, "Sweep end")->required();
  sweep->add_option("--T", cfg.T, "Temperature for thermal quantities");
  sweep->add_option("--t", cfg.t, "Time for dynamical quantities");

  for (auto* sub : {verify, fig2, fig3, fig4, fig5, sweep}) add_common_flags(*sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tlent::cli::kExitValidation;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    cfg.d_range_given = sub->count("--d-min") + sub->count("--d-max") + sub->count("--steps") > 0;
  }
  return tlent::cli::run(cfg, std::cout, std::cerr);
}
