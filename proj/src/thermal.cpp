#include "tlent/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlent/error.hpp"

namespace tlent {

namespace {

void require_positive(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw Error(ErrorCode::TemperatureNonPositive, "T = " + std::to_string(T));
}

// Boltzmann exponents (in units of 1/T) of the four closed-form terms,
// together with their common shift m.
struct ShiftedExponents {
  double m;
  double up;      // e^{B/T − m}
  double down;    // e^{−B/T − m}
  double plus;    // e^{(g/2 + J)/T − m}
  double minus;   // e^{(g/2 − J)/T − m}
  double one;     // e^{−m}

  ShiftedExponents(const ModelParams& p, double T) {
    const double B = p.B() / T;
    const double J = p.J() / T;
    const double h = 0.5 * p.g / T;
    m = std::max({std::abs(B), h + std::abs(J), 0.0});
    up = std::exp(B - m);
    down = std::exp(-B - m);
    plus = std::exp(h + J - m);
    minus = std::exp(h - J - m);
    one = std::exp(-m);
  }

  double denominator() const { return up + down + plus + minus; }
};

}  // namespace

double ThermalPoint::z() const { return std::exp(log_z); }

ThermalPoint thermal_state(const ModelParams& params, double T) {
  require_positive(T);
  const SpinHamiltonian ham = conjugated_hamiltonian(params);
  const HermEig eig = hermitian_eig(ham.h);
  const double ground = eig.values.front();

  CVector weights(4);
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double w = std::exp(-(eig.values[k] - ground) / T);
    weights[k] = w;
    total += w;
  }
  for (auto& w : weights) w /= total;

  ThermalPoint point;
  point.T = T;
  point.rho = reconstruct(eig, weights);
  point.rho = (point.rho + point.rho.adjoint()) * cplx{0.5};
  point.log_z = -ground / T + std::log(total);
  point.c = wootters_concurrence(point.rho);
  return point;
}

CMatrix thermal_state_closed_form(const ModelParams& params, double T) {
  require_positive(T);
  params.validate();
  const ShiftedExponents e(params, T);
  const double den = e.denominator();
  const double a = inhomogeneity(params.d);
  const double b = flip_flop(params.d);

  CMatrix rho(4, 4);
  rho(0, 0) = e.down / den;
  rho(1, 1) = 0.5 * ((1.0 - a) * e.plus + (1.0 + a) * e.minus) / den;
  rho(2, 2) = 0.5 * ((1.0 + a) * e.plus + (1.0 - a) * e.minus) / den;
  rho(3, 3) = e.up / den;
  const cplx off = 0.5 * b * (e.plus - e.minus) / den * std::polar(1.0, params.phi);
  rho(1, 2) = off;
  rho(2, 1) = std::conj(off);
  return rho;
}

double log_partition_closed_form(const ModelParams& params, double T) {
  require_positive(T);
  params.validate();
  const ShiftedExponents e(params, T);
  return -params.g / (4.0 * T) + e.m + std::log(e.denominator());
}

ConcurrenceValue thermal_concurrence(const ModelParams& params, double T) {
  require_positive(T);
  params.validate();
  const ShiftedExponents e(params, T);
  const double b = flip_flop(params.d);
  // e^{g/2T} sinh(|J|/T) = (e^{(g/2+|J|)/T} − e^{(g/2−|J|)/T}) / 2
  const double big = std::max(e.plus, e.minus);
  const double small = std::min(e.plus, e.minus);
  const double numerator = 0.5 * b * (big - small) - e.one;
  // cosh(B/T) + e^{g/2T}cosh(J/T), times e^{−m}
  const double denominator = 0.5 * e.denominator();
  return {std::max(numerator / denominator, 0.0), ConcurrenceMethod::Wootters};
}

ConcurrenceValue zero_t_limit(const ModelParams& params) {
  params.validate();
  const double b = flip_flop(params.d);
  const double threshold = std::abs(params.J()) + 0.5 * params.g;
  const double B = std::abs(params.B());
  double value = 0.0;
  if (params.J() != 0.0 && threshold > 0.0) {
    const double tol = 1e-12 * std::max({1.0, B, threshold});
    if (B < threshold - tol)
      value = b;
    else if (B <= threshold + tol)
      value = 0.5 * b;
  }
  return {value, ConcurrenceMethod::Wootters};
}

double c_max(double d) { return flip_flop(d); }

double critical_function(const ModelParams& params, double T) {
  require_positive(T);
  const double b = flip_flop(params.d);
  if (b == 0.0) return -1.0;
  const double h = 0.5 * params.g / T;
  const double j = std::abs(params.J()) / T;
  return 0.5 * b * std::exp(h + j) * -std::expm1(-2.0 * j) - 1.0;
}

CriticalTemperature critical_temperature(const ModelParams& params) {
  params.validate();
  CriticalTemperature out;
  if (flip_flop(params.d) == 0.0 || params.J() == 0.0) {
    out.no_sign_change = true;
    out.residual = -1.0;
    return out;
  }

  constexpr int kMaxExpansions = 200;
  auto f = [&](double T) { return critical_function(params, T); };

  double lo = 1.0;
  double hi = 1.0;
  bool bracketed = false;
  if (f(1.0) > 0.0) {
    for (int k = 0; k < kMaxExpansions && !bracketed; ++k) {
      lo = hi;
      hi *= 2.0;
      bracketed = f(hi) <= 0.0;
    }
  } else {
    for (int k = 0; k < kMaxExpansions && !bracketed; ++k) {
      hi = lo;
      lo *= 0.5;
      bracketed = f(lo) > 0.0;
    }
  }
  if (!bracketed) {
    out.no_sign_change = true;
    out.residual = f(1.0);
    return out;
  }

  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-12 * std::max(1.0, mid)) break;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  out.t_lo = lo;
  out.t_hi = hi;
  out.tc = 0.5 * (lo + hi);
  out.residual = f(out.tc);
  return out;
}

}  // namespace tlent
