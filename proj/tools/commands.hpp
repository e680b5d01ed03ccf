#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace tlent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

struct RunConfig {
  std::string subcommand;

  double d_min = 2.0;
  double d_max = 10.0;
  std::size_t steps = 161;
  bool d_range_given = false;
  std::vector<double> d_list;

  double q = 2.0;
  std::size_t n = 3;
  int branch = 1;
  std::string family = "all";

  double phi = std::numbers::pi;
  double B = 0.0;
  double J = 1.0;
  double g = 1.0;
  double T = 1.0;
  double t = 0.0;
  double gamma = 0.5;
  double alpha = std::numbers::pi / 4;
  double t_max = 4 * std::numbers::pi;
  std::size_t t_steps = 257;

  // sweep
  std::string quantity;
  std::string over;
  double min = 0.0;
  double max = 1.0;

  std::optional<std::string> out;
  std::optional<std::string> windows_out;
  double tolerance = 1e-10;
  bool gnuplot = false;
};

/// Formats a double with 17 significant digits, independent of locale.
std::string format_number(double x);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig2(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig3(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig4(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig5(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.subcommand and maps library errors onto exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tlent::cli
