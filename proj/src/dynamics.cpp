#include "tlent/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlent/error.hpp"

namespace tlent {

namespace {

constexpr double kBoundaryTol = 1e-10;
constexpr double kTangentDepth = 1e-12;

double bisect_root(double d, double lo, double hi) {
  // esd_pre_clamp(lo) and esd_pre_clamp(hi) have opposite signs.
  const bool lo_positive = esd_pre_clamp(d, lo) > 0.0;
  while (hi - lo > kBoundaryTol) {
    const double mid = 0.5 * (lo + hi);
    if ((esd_pre_clamp(d, mid) > 0.0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

InitialState::InitialState(double gamma, double alpha) : gamma_(gamma), alpha_(alpha) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorCode::InvalidParams, "gamma must lie in (0, 1]");
  if (!std::isfinite(alpha)) throw Error(ErrorCode::InvalidParams, "alpha must be finite");
  const CVector psi{0.0, std::sin(alpha), std::cos(alpha), 0.0};
  rho_ = CMatrix::identity(4) * cplx{(1.0 - gamma) / 4.0} + CMatrix::outer(psi, psi) * cplx{gamma};
}

CMatrix propagator(const ModelParams& params, double t) {
  const HermEig eig = hermitian_eig(conjugated_hamiltonian(params).h);
  CVector mapped(4);
  for (std::size_t k = 0; k < 4; ++k) mapped[k] = std::polar(1.0, -eig.values[k] * t);
  return reconstruct(eig, mapped);
}

CMatrix propagator_closed_form(const ModelParams& params, double t) {
  params.validate();
  const double B = params.B();
  const double J = params.J();
  const double g = params.g;
  const double a = inhomogeneity(params.d);
  const double b = flip_flop(params.d);
  const cplx i{0.0, 1.0};
  const cplx common = std::polar(1.0, g * t / 4.0);
  const double c = std::cos(J * t);
  const double s = std::sin(J * t);

  CMatrix u(4, 4);
  u(0, 0) = std::polar(1.0, -(B + g / 4.0) * t);
  u(3, 3) = std::polar(1.0, (B - g / 4.0) * t);
  u(1, 1) = common * (c - i * a * s);
  u(2, 2) = common * (c + i * a * s);
  u(1, 2) = common * i * std::polar(1.0, params.phi) * b * s;
  u(2, 1) = common * i * std::polar(1.0, -params.phi) * b * s;
  return u;
}

CMatrix evolved_state(const ModelParams& params, const InitialState& init, double t) {
  const CMatrix u = propagator(params, t);
  CMatrix rho = u * init.rho() * u.adjoint();
  return (rho + rho.adjoint()) * cplx{0.5};
}

ConcurrenceValue evolved_concurrence(const ModelParams& params, const InitialState& init, double t) {
  return wootters_concurrence(evolved_state(params, init, t));
}

double esd_pre_clamp(double d, double t) {
  if (d < 2.0) throw Error(ErrorCode::LoopOutOfDomain, "d = " + std::to_string(d) + " < 2");
  const double d2 = d * d;
  const double d4 = d2 * d2;
  const double k = d2 - 8.0;
  const double x = 16.0 * (d2 - 4.0) + k * k * std::cos(t);
  const double y2 = d4 * k * k * std::sin(t) * std::sin(t);
  return std::sqrt(x * x + y2) / (2.0 * d4) - 0.25;
}

ConcurrenceValue esd_closed_form(double d, double t) {
  return {std::max(esd_pre_clamp(d, t), 0.0), ConcurrenceMethod::Wootters};
}

std::vector<EsdWindow> esd_windows(double d, double t_max, double grid_step) {
  if (d < 2.0) throw Error(ErrorCode::LoopOutOfDomain, "d = " + std::to_string(d) + " < 2");
  if (!(t_max > 0.0)) throw Error(ErrorCode::InvalidParams, "t_max must be positive");
  if (!(grid_step > 0.0)) grid_step = t_max / 4096.0;

  const auto steps = static_cast<std::size_t>(std::ceil(t_max / grid_step));
  auto grid = [&](std::size_t k) { return k == steps ? t_max : static_cast<double>(k) * grid_step; };

  std::vector<EsdWindow> windows;
  bool dead = esd_pre_clamp(d, 0.0) <= 0.0;
  EsdWindow current;
  if (dead) current.t_death = 0.0;

  double prev_t = 0.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = grid(k);
    const bool now_dead = esd_pre_clamp(d, t) <= 0.0;
    if (now_dead && !dead) {
      current = EsdWindow{bisect_root(d, prev_t, t), 0.0, false};
    } else if (!now_dead && dead) {
      current.t_revival = bisect_root(d, prev_t, t);
      // A tangential zero (depth at round-off level) is not a death interval.
      if (esd_pre_clamp(d, 0.5 * (current.t_death + current.t_revival)) < -kTangentDepth) windows.push_back(current);
    }
    dead = now_dead;
    prev_t = t;
  }
  if (dead) {
    current.t_revival = t_max;
    current.truncated = true;
    windows.push_back(current);
  }
  return windows;
}

std::vector<EsdScanRow> esd_scan(std::span<const double> ds, double t_max, double grid_step) {
  std::vector<EsdScanRow> rows;
  rows.reserve(ds.size());
  for (const double d : ds) {
    const auto w = esd_windows(d, t_max, grid_step);
    rows.push_back({d, !w.empty(), w.size()});
  }
  return rows;
}

std::vector<double> esd_region_boundaries(double d_lo, double d_hi, std::size_t steps, double t_max) {
  if (steps < 2 || !(d_hi > d_lo)) throw Error(ErrorCode::InvalidParams, "need d_hi > d_lo and steps >= 2");
  auto has_death = [&](double d) { return !esd_windows(d, t_max).empty(); };

  std::vector<double> boundaries;
  const double h = (d_hi - d_lo) / static_cast<double>(steps - 1);
  double prev_d = d_lo;
  bool prev = has_death(d_lo);
  for (std::size_t k = 1; k < steps; ++k) {
    const double d = k + 1 == steps ? d_hi : d_lo + static_cast<double>(k) * h;
    const bool now = has_death(d);
    if (now != prev) {
      double lo = prev_d;
      double hi = d;
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (has_death(mid) == prev)
          lo = mid;
        else
          hi = mid;
      }
      boundaries.push_back(0.5 * (lo + hi));
    }
    prev = now;
    prev_d = d;
  }
  return boundaries;
}

}  // namespace tlent
