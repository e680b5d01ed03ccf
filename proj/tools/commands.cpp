#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tlent/dynamics.hpp"
#include "tlent/entanglement.hpp"
#include "tlent/error.hpp"
#include "tlent/spin_model.hpp"
#include "tlent/thermal.hpp"
#include "tlent/tl_rep.hpp"
#include "tlent/yang_baxter.hpp"

namespace tlent::cli {

namespace {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw ValidationError("--steps must be at least 2");
  if (!(hi > lo)) throw ValidationError("range must be nonempty (max > min)");
  std::vector<double> v(steps);
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) v[k] = k + 1 == steps ? hi : lo + static_cast<double>(k) * h;
  return v;
}

std::vector<double> loop_grid(const RunConfig& cfg) {
  if (cfg.d_min < 2.0) throw ValidationError("--d-min must be >= 2");
  return linspace(cfg.d_min, cfg.d_max, cfg.steps);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open " + path + " for writing");
  f << text;
}

// Writes the primary CSV to --out or the given stream, plus the gnuplot script.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& csv, const std::string& plot) {
  if (cfg.gnuplot && !cfg.out) throw ValidationError("--gnuplot requires --out");
  if (cfg.out) {
    write_text(*cfg.out, csv);
    if (cfg.gnuplot) write_text(*cfg.out + ".gp", plot);
  } else {
    out << csv;
  }
}

std::string plot_script(const RunConfig& cfg, const std::string& xlabel, const std::string& ylabel,
                        const std::vector<std::string>& columns) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set xlabel '" << xlabel << "'\n"
    << "set ylabel '" << ylabel << "'\n"
    << "plot ";
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (k) s << ", ";
    s << "'" << cfg.out.value_or("data.csv") << "' using 1:" << columns[k] << " with lines";
  }
  s << "\n";
  return s.str();
}

struct CheckRow {
  std::string identity;
  double residual;
};

void add(std::vector<CheckRow>& rows, std::string name, double residual) {
  rows.push_back({std::move(name), residual});
}

std::string family_name(const FamilySpec& spec) {
  std::ostringstream s;
  if (const auto* m = std::get_if<family::MaxEntangled>(&spec)) {
    s << "max-entangled(n=" << m->n << ")";
  } else if (const auto* t = std::get_if<family::TwoDim>(&spec)) {
    s << "two-dim(q=" << format_number(t->q) << ")";
  } else {
    const auto& h = std::get<family::ThreeDim>(spec);
    s << "three-dim(branch=" << h.branch << ",q=" << format_number(h.q) << ")";
  }
  return s.str();
}

void check_family(std::vector<CheckRow>& rows, const FamilySpec& spec) {
  const TLGenerator gen = build_generator(spec);
  const auto tl = verify_tl_relations(gen);
  const auto cons = verify_constraints(AmplitudeMatrix::from_state(build_state(spec), gen.n), gen.d);
  const std::string name = family_name(spec);
  add(rows, "tl_relations " + name, tl.max());
  add(rows, "amplitude_constraints " + name, cons.max());
}

void check_braid(std::vector<CheckRow>& rows, double q) {
  const TLGenerator gen = build_generator(family::TwoDim{q, 0.4, -0.9});
  const std::string tag = "(q=" + format_number(q) + ")";
  double ybe = 0.0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const cplx x = std::polar(1.0, 0.25 + 0.6 * a);
      const cplx y = std::polar(1.0, 0.35 + 0.55 * b);
      ybe = std::max(ybe, verify_ybe(gen, x, y));
    }
  add(rows, "yang_baxter " + tag, ybe);

  std::vector<double> thetas;
  for (int k = 1; k < 24; ++k) thetas.push_back(k * std::numbers::pi / 12.0 - 0.05);
  add(rows, "unitarity " + tag, verify_unitarity(gen, thetas).max());

  const BraidOperator ri = yang_baxterize(gen, cplx{0.0, 1.0});
  add(rows, "braid_square_minus_identity " + tag, distance(ri.r * ri.r, CMatrix::identity(4) * cplx{-1.0}));
}

void check_models(std::vector<CheckRow>& rows) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> field(-2.0, 2.0);
  std::uniform_real_distribution<double> loop(2.0, 20.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  double ham = 0.0;
  double eig = 0.0;
  double prop = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double J = field(rng);
    const double B = std::abs(field(rng));
    const ModelParams p = ModelParams::from_fields(B, J, field(rng), loop(rng), angle(rng));
    const CMatrix h = conjugated_hamiltonian(p).h;
    ham = std::max(ham, distance(h, analytic_hamiltonian(p).h));
    const EigenSystem es = eigensystem(p);
    for (std::size_t s = 0; s < 4; ++s) {
      CVector residual = h * es.states[s];
      for (std::size_t i = 0; i < 4; ++i) residual[i] -= es.energies[s] * es.states[s][i];
      eig = std::max(eig, norm(residual));
    }
    const double t = 3.0 * angle(rng);
    prop = std::max(prop, distance(propagator(p, t), propagator_closed_form(p, t)));
  }
  add(rows, "hamiltonian_analytic_vs_conjugated", ham);
  add(rows, "eigenpairs", eig);
  add(rows, "propagator_closed_form", prop);

  double thermal = 0.0;
  for (const double d : {2.0, 2.5, 2 * std::numbers::sqrt2, 4.0, 8.0})
    for (const double T : {0.1, 0.5, 1.0, 2.0})
      for (const double B : {0.0, 1.0, 3.0})
        for (const double J : {0.5, 1.0})
          for (const double g : {0.0, 1.0}) {
            const ModelParams p = ModelParams::from_fields(B, J, g, d, 0.7);
            thermal = std::max(thermal,
                               std::abs(thermal_state(p, T).c.value - thermal_concurrence(p, T).value));
          }
  add(rows, "thermal_concurrence_vs_wootters", thermal);

  double esd = 0.0;
  const InitialState init(0.5, std::numbers::pi / 4);
  for (const double d : {2.1, 3.0, 4.0, 5.0, 8.0})
    for (int k = 0; k < 64; ++k) {
      const double t = 4 * std::numbers::pi * k / 63.0;
      const ModelParams p = ModelParams::from_fields(1.3, 0.5, 0.6, d, std::numbers::pi);
      esd = std::max(esd, std::abs(evolved_concurrence(p, init, t).value - esd_closed_form(d, t).value));
    }
  add(rows, "esd_closed_form_vs_evolution", esd);
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) line += ',';
    line += c;
    first = false;
  }
  line += '\n';
  return line;
}

ModelParams model_from(const RunConfig& cfg, double d) {
  return ModelParams::from_fields(cfg.B, cfg.J, cfg.g, d, cfg.phi);
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::vector<CheckRow> rows;
  const std::string& fam = cfg.family;
  if (fam == "all") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    for (const std::size_t n : {2u, 3u, 4u}) {
      std::vector<double> phases(n);
      for (auto& k : phases) k = angle(rng);
      check_family(rows, family::MaxEntangled{n, phases});
    }
    for (const double q : {0.2, 0.5, 1.0, 2.0, 5.0}) check_family(rows, family::TwoDim{q, angle(rng), angle(rng)});
    for (const int b : {1, 2, 3})
      for (const double q : {0.5, 1.0, 2.0})
        check_family(rows, family::ThreeDim{b, q, {angle(rng), angle(rng), angle(rng)}});
    for (const double q : {0.5, 1.0, 2.0, 4.0}) check_braid(rows, q);
    check_models(rows);
  } else if (fam == "max-entangled") {
    check_family(rows, family::MaxEntangled{cfg.n, {}});
  } else if (fam == "two-dim") {
    check_family(rows, family::TwoDim{cfg.q, 0.0, 0.0});
    check_braid(rows, cfg.q);
  } else if (fam == "three-dim") {
    check_family(rows, family::ThreeDim{cfg.branch, cfg.q, {}});
  } else {
    throw ValidationError("unknown --family '" + fam + "'");
  }

  bool ok = true;
  std::ostringstream csv;
  csv << "identity,max_residual,status\n";
  for (const auto& r : rows) {
    const bool pass = r.residual <= cfg.tolerance;
    ok = ok && pass;
    csv << csv_row({r.identity, format_number(r.residual), pass ? "pass" : "FAIL"});
  }
  emit(cfg, out, csv.str(), "");
  return ok ? kExitOk : kExitValidation;
}

int cmd_fig2(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::ostringstream csv;
  csv << "d,C_n2,C_n3\n";
  for (const double d : loop_grid(cfg)) {
    const CVector two = build_state(family::TwoDim{q_for_loop(d), 0.0, 0.0});
    const double c2 = generalized_concurrence(two, 2).value;
    if (std::abs(c2 - 2.0 / d) > cfg.tolerance)
      throw ValidationError("two-dim concurrence deviates from 2/d at d=" + format_number(d));

    std::string c3_cell;
    if (d >= 3.0 - 1e-12) {
      const double q = q_for_loop(std::max(d - 1.0, 2.0));
      double c3 = 0.0;
      for (const int b : {1, 2, 3}) {
        c3 = generalized_concurrence(build_state(family::ThreeDim{b, q, {}}), 3).value;
        if (std::abs(c3 - std::sqrt(3.0 / d)) > cfg.tolerance)
          throw ValidationError("three-dim concurrence deviates from sqrt(3/d) at d=" + format_number(d));
      }
      c3_cell = format_number(c3);
    }
    csv << csv_row({format_number(d), format_number(c2), c3_cell});
  }
  emit(cfg, out, csv.str(), plot_script(cfg, "d", "C", {"2", "3"}));
  return kExitOk;
}

int cmd_fig3(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::ostringstream csv;
  csv << "d,C_max\n";
  for (const double d : loop_grid(cfg)) csv << csv_row({format_number(d), format_number(c_max(d))});
  emit(cfg, out, csv.str(), plot_script(cfg, "d", "C_max", {"2"}));
  return kExitOk;
}

int cmd_fig4(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::ostringstream csv;
  csv << "d,T_c\n";
  for (const double d : loop_grid(cfg)) {
    const CriticalTemperature tc = critical_temperature(model_from(cfg, d));
    csv << csv_row({format_number(d), format_number(tc.tc)});
  }
  emit(cfg, out, csv.str(), plot_script(cfg, "d", "T_c", {"2"}));
  return kExitOk;
}

int cmd_fig5(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::vector<double> ds = cfg.d_list;
  if (ds.empty()) ds = cfg.d_range_given ? loop_grid(cfg) : std::vector<double>{2.1, 4.0, 5.0, 8.0};
  if (std::any_of(ds.begin(), ds.end(), [](double d) { return d < 2.0; }))
    throw ValidationError("every d must be >= 2");
  if (!(cfg.t_max > 0.0)) throw ValidationError("--t-max must be positive");
  const auto ts = linspace(0.0, cfg.t_max, cfg.t_steps);

  std::ostringstream data;
  std::ostringstream windows;
  data << "d,t,C\n";
  windows << "d,t_death,t_revival\n";
  for (const double d : ds) {
    for (const double t : ts) data << csv_row({format_number(d), format_number(t), format_number(esd_closed_form(d, t).value)});
    for (const auto& w : esd_windows(d, cfg.t_max))
      windows << csv_row({format_number(d), format_number(w.t_death), w.truncated ? "" : format_number(w.t_revival)});
  }

  emit(cfg, out, data.str(), "set datafile separator ','\nset xlabel 't'\nset ylabel 'd'\nset zlabel 'C'\nsplot '" +
                                cfg.out.value_or("data.csv") + "' using 2:1:3 with points\n");
  if (cfg.windows_out) {
    write_text(*cfg.windows_out, windows.str());
  } else if (cfg.out) {
    std::string path = *cfg.out;
    if (path.size() > 4 && path.ends_with(".csv")) path.resize(path.size() - 4);
    write_text(path + "_windows.csv", windows.str());
  } else {
    out << '\n' << windows.str();
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::map<std::string, double> base{{"d", cfg.d_min}, {"T", cfg.T},         {"B", cfg.B},
                                     {"J", cfg.J},     {"g", cfg.g},         {"phi", cfg.phi},
                                     {"t", cfg.t},     {"gamma", cfg.gamma}, {"alpha", cfg.alpha}};
  if (!base.contains(cfg.over)) throw ValidationError("unknown --over parameter '" + cfg.over + "'");

  using Quantity = std::function<double(const std::map<std::string, double>&)>;
  auto model = [](const std::map<std::string, double>& p) {
    return ModelParams::from_fields(p.at("B"), p.at("J"), p.at("g"), p.at("d"), p.at("phi"));
  };
  const std::map<std::string, Quantity> quantities{
      {"c_n2", [](const auto& p) { return generalized_concurrence(build_state(family::TwoDim{q_for_loop(p.at("d"))}), 2).value; }},
      {"c_n3",
       [](const auto& p) {
         if (p.at("d") < 3.0) throw ValidationError("c_n3 needs d >= 3");
         return generalized_concurrence(build_state(family::ThreeDim{1, q_for_loop(p.at("d") - 1.0), {}}), 3).value;
       }},
      {"c_max", [](const auto& p) { return c_max(p.at("d")); }},
      {"tc", [&](const auto& p) { return critical_temperature(model(p)).tc; }},
      {"thermal_c", [&](const auto& p) { return thermal_concurrence(model(p), p.at("T")).value; }},
      {"zero_t", [&](const auto& p) { return zero_t_limit(model(p)).value; }},
      {"esd_c", [](const auto& p) { return esd_closed_form(p.at("d"), p.at("t")).value; }},
      {"evolved_c",
       [&](const auto& p) {
         return evolved_concurrence(model(p), InitialState(p.at("gamma"), p.at("alpha")), p.at("t")).value;
       }},
  };
  const auto it = quantities.find(cfg.quantity);
  if (it == quantities.end()) throw ValidationError("unknown --quantity '" + cfg.quantity + "'");

  std::ostringstream csv;
  csv << cfg.over << ',' << cfg.quantity << '\n';
  for (const double v : linspace(cfg.min, cfg.max, cfg.steps)) {
    auto params = base;
    params[cfg.over] = v;
    csv << csv_row({format_number(v), format_number(it->second(params))});
  }
  emit(cfg, out, csv.str(), plot_script(cfg, cfg.over, cfg.quantity, {"2"}));
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)> commands{
      {"verify", cmd_verify}, {"fig2", cmd_fig2}, {"fig3", cmd_fig3},
      {"fig4", cmd_fig4},     {"fig5", cmd_fig5}, {"sweep", cmd_sweep}};
  const auto it = commands.find(cfg.subcommand);
  if (it == commands.end()) {
    err << "unknown subcommand '" << cfg.subcommand << "'\n";
    return kExitValidation;
  }
  try {
    return it->second(cfg, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numerical() ? kExitNumerical : kExitValidation;
  }
}

}  // namespace tlent::cli
