#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "commands.hpp"

using namespace tlent::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig with(std::string sub) {
  RunConfig cfg;
  cfg.subcommand = std::move(sub);
  return cfg;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double num(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(ec == std::errc{});
  REQUIRE(ptr == s.data() + s.size());
  return v;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tlent_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("format_number round-trips") {
  for (const double x : {0.1, 1.0 / 3.0, -2.5e-300, 12345.678, 0.0}) CHECK(num(format_number(x)) == x);
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("verify") {
  const Result ok = invoke(with("verify"));
  CHECK(ok.code == kExitOk);
  const auto rows = parse_csv(ok.out);
  REQUIRE(rows.size() > 10);
  CHECK(rows[0] == std::vector<std::string>{"identity", "max_residual", "status"});
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].back() == "pass");
    CHECK(num(rows[k][rows[k].size() - 2]) <= 1e-10);
  }

  RunConfig strict = with("verify");
  strict.tolerance = 1e-16;
  CHECK(invoke(strict).code == kExitValidation);

  RunConfig two = with("verify");
  two.family = "two-dim";
  two.q = 3.0;
  CHECK(invoke(two).code == kExitOk);

  RunConfig bogus = with("verify");
  bogus.family = "four-dim";
  const Result bad = invoke(bogus);
  CHECK(bad.code == kExitValidation);
  CHECK(bad.err.find("four-dim") != std::string::npos);
}

TEST_CASE("fig2") {
  RunConfig cfg = with("fig2");
  cfg.d_min = 2.0;
  cfg.d_max = 12.0;
  cfg.steps = 11;
  const Result r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"d", "C_n2", "C_n3"});
  CHECK(num(rows[1][1]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1][2].empty());
  CHECK(num(rows[2][1]) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(num(rows[2][2]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(num(rows[11][2]) == doctest::Approx(0.5).epsilon(1e-12));

  RunConfig low = with("fig2");
  low.d_min = 1.5;
  CHECK(invoke(low).code == kExitValidation);
  RunConfig one = with("fig2");
  one.steps = 1;
  CHECK(invoke(one).code == kExitValidation);
  RunConfig empty = with("fig2");
  empty.d_min = 5.0;
  empty.d_max = 5.0;
  CHECK(invoke(empty).code == kExitValidation);
}

TEST_CASE("fig3 and fig4") {
  RunConfig cfg = with("fig3");
  cfg.d_list = {};
  cfg.d_min = 2.0;
  cfg.d_max = 2.0 * 2.0 * std::numbers::sqrt2 - 2.0;  // midpoint is 2√2
  cfg.steps = 3;
  const auto r3 = parse_csv(invoke(cfg).out);
  REQUIRE(r3.size() == 4);
  CHECK(r3[0] == std::vector<std::string>{"d", "C_max"});
  CHECK(num(r3[1][1]) == 0.0);
  CHECK(num(r3[2][1]) == doctest::Approx(1.0).epsilon(1e-12));

  cfg.subcommand = "fig4";
  const auto r4 = parse_csv(invoke(cfg).out);
  REQUIRE(r4.size() == 4);
  CHECK(r4[0] == std::vector<std::string>{"d", "T_c"});
  CHECK(num(r4[1][1]) == 0.0);
  CHECK(std::abs(num(r4[2][1]) - 1.5) <= 0.1);
  CHECK(num(r4[2][1]) > num(r4[3][1]));
}

TEST_CASE("fig5 on stdout") {
  RunConfig cfg = with("fig5");
  cfg.d_list = {2.1, 2.0 * std::numbers::sqrt2};
  cfg.t_steps = 65;
  const Result r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  const auto data = parse_csv(r.out);
  REQUIRE(data.size() == 1 + 2 * 65);
  CHECK(data[0] == std::vector<std::string>{"d", "t", "C"});
  for (std::size_t k = 1; k < data.size(); ++k) {
    if (num(data[k][1]) == 0.0) CHECK(std::abs(num(data[k][2]) - 0.25) <= 1e-12);
    if (k > 65) CHECK(std::abs(num(data[k][2]) - 0.25) <= 1e-12);
  }
  const auto tail = r.out.substr(r.out.find("\n\n") + 2);
  const auto windows = parse_csv(tail);
  REQUIRE(windows.size() == 3);
  CHECK(windows[0] == std::vector<std::string>{"d", "t_death", "t_revival"});
  CHECK(num(windows[1][0]) == 2.1);
  CHECK(num(windows[1][1]) < std::numbers::pi);
  CHECK(num(windows[1][2]) > std::numbers::pi);
}

TEST_CASE("fig5 files and gnuplot") {
  const auto out = temp_path("fig5.csv");
  const auto win = temp_path("fig5_windows.csv");
  const auto gp = temp_path("fig5.csv.gp");
  std::filesystem::remove(out);
  std::filesystem::remove(win);
  RunConfig cfg = with("fig5");
  cfg.d_list = {2.1};
  cfg.t_steps = 9;
  cfg.out = out.string();
  cfg.gnuplot = true;
  const Result r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(parse_csv(slurp(out)).size() == 10);
  CHECK(parse_csv(slurp(win)).size() == 3);
  CHECK(std::filesystem::exists(gp));

  RunConfig no_out = with("fig3");
  no_out.gnuplot = true;
  CHECK(invoke(no_out).code == kExitValidation);

  RunConfig bad = with("fig5");
  bad.d_list = {1.0};
  CHECK(invoke(bad).code == kExitValidation);
  for (const auto& p : {out, win, gp}) std::filesystem::remove(p);
}

TEST_CASE("sweep") {
  RunConfig cfg = with("sweep");
  cfg.quantity = "thermal_c";
  cfg.over = "T";
  cfg.min = 0.1;
  cfg.max = 3.0;
  cfg.steps = 5;
  cfg.d_min = 2.0 * std::numbers::sqrt2;
  const Result r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"T", "thermal_c"});
  CHECK(num(rows[1][1]) > num(rows[3][1]));
  CHECK(num(rows[5][1]) == 0.0);

  RunConfig esd = with("sweep");
  esd.quantity = "esd_c";
  esd.over = "d";
  esd.min = 2.0;
  esd.max = 9.0;
  esd.steps = 8;
  const auto esd_rows = parse_csv(invoke(esd).out);
  REQUIRE(esd_rows.size() == 9);
  for (std::size_t k = 1; k < esd_rows.size(); ++k) CHECK(num(esd_rows[k][1]) == doctest::Approx(0.25));

  RunConfig bad_q = with("sweep");
  bad_q.quantity = "entropy";
  bad_q.over = "d";
  CHECK(invoke(bad_q).code == kExitValidation);
  RunConfig bad_over = with("sweep");
  bad_over.quantity = "c_max";
  bad_over.over = "zeta";
  CHECK(invoke(bad_over).code == kExitValidation);
  RunConfig domain = with("sweep");
  domain.quantity = "c_max";
  domain.over = "d";
  domain.min = 1.0;
  domain.max = 3.0;
  const Result dom = invoke(domain);
  CHECK(dom.code == kExitValidation);
  CHECK_FALSE(dom.err.empty());
}

TEST_CASE("determinism and CSV shape") {
  RunConfig cfg = with("fig4");
  cfg.steps = 17;
  const Result a = invoke(cfg);
  const Result b = invoke(cfg);
  CHECK(a.out == b.out);
  CHECK(a.out.back() == '\n');
  CHECK(a.out.find("\r") == std::string::npos);
}

TEST_CASE("unknown subcommand") { CHECK(invoke(with("fig9")).code == kExitValidation); }
