#pragma once

#include "tlent/entanglement.hpp"
#include "tlent/linalg.hpp"
#include "tlent/spin_model.hpp"

namespace tlent {

struct ThermalPoint {
  double T = 1.0;
  CMatrix rho;
  double log_z = 0.0;  // ln Tr e^{−H/T}; Z itself overflows for small T
  ConcurrenceValue c;  // Wootters concurrence of rho

  double z() const;
};

/// Gibbs state e^{−H/T}/Z of the conjugated Hamiltonian, computed from its
/// numerical eigendecomposition with the ground energy shifted out.
/// Throws TemperatureNonPositive for T <= 0.
ThermalPoint thermal_state(const ModelParams& params, double T);

/// The same density matrix from the explicit X-shaped closed form with
/// prefactor 1/(2(cosh(B/T) + e^{g/2T} cosh(J/T))).
CMatrix thermal_state_closed_form(const ModelParams& params, double T);
double log_partition_closed_form(const ModelParams& params, double T);

/// [(4√(d²−4)/d²) e^{g/2T} sinh(|J|/T) − 1] / [cosh(B/T) + e^{g/2T} cosh(J/T)],
/// clamped at zero. Evaluated with exponents shifted so small T is safe.
ConcurrenceValue thermal_concurrence(const ModelParams& params, double T);

/// T → 0⁺ limit of thermal_concurrence:
///   C_max(d)    for |B| < |J| + g/2
///   C_max(d)/2  for |B| = |J| + g/2 (relative tolerance 1e-12)
///   0           for |B| > |J| + g/2, and whenever J = 0 or |J| + g/2 <= 0
ConcurrenceValue zero_t_limit(const ModelParams& params);

/// 4√(d²−4)/d². Maximal (= 1) at d = 2√2. Throws LoopOutOfDomain for d < 2.
double c_max(double d);

/// (4√(d²−4)/d²) e^{g/2T} sinh(|J|/T) − 1; its sign is the sign of the
/// thermal concurrence numerator.
double critical_function(const ModelParams& params, double T);

struct CriticalTemperature {
  double tc = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double residual = 0.0;        // critical_function at tc
  bool no_sign_change = false;  // no root found; tc reported as 0
};

/// Bisection root of critical_function. The bracket is found by doubling /
/// halving from T = 1; converged at width <= 1e-12·max(1, Tc).
/// d = 2 and J = 0 give tc = 0 with no_sign_change set.
CriticalTemperature critical_temperature(const ModelParams& params);

}  // namespace tlent
