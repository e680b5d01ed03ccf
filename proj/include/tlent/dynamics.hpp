#pragma once

#include <span>
#include <vector>

#include "tlent/entanglement.hpp"
#include "tlent/linalg.hpp"
#include "tlent/spin_model.hpp"

namespace tlent {

/// ρ₀ = (1−γ)/4·I + γ|ψ⟩⟨ψ| with ψ = sin α|01⟩ + cos α|10⟩.
class InitialState {
 public:
  // Throws InvalidParams unless 0 < gamma <= 1.
  InitialState(double gamma, double alpha);

  double gamma() const noexcept { return gamma_; }
  double alpha() const noexcept { return alpha_; }
  const CMatrix& rho() const noexcept { return rho_; }

 private:
  double gamma_;
  double alpha_;
  CMatrix rho_;
};

/// e^{−iHt} from the eigendecomposition of the conjugated Hamiltonian.
CMatrix propagator(const ModelParams& params, double t);

/// Element-wise closed form of e^{−iHt} in {|00⟩,|01⟩,|10⟩,|11⟩}.
CMatrix propagator_closed_form(const ModelParams& params, double t);

/// U(t) ρ₀ U(t)†.
CMatrix evolved_state(const ModelParams& params, const InitialState& init, double t);

ConcurrenceValue evolved_concurrence(const ModelParams& params, const InitialState& init, double t);

/// √((16(d²−4) + (d²−8)² cos t)² + d⁴(d²−8)² sin²t)/(2d⁴) − 1/4, before
/// clamping. Valid for γ = 1/2, α = π/4, J = 1/2, φ = π, any B and g.
double esd_pre_clamp(double d, double t);

/// max(0, esd_pre_clamp). Throws LoopOutOfDomain for d < 2.
ConcurrenceValue esd_closed_form(double d, double t);

/// A maximal interval on which the closed-form concurrence is zero.
struct EsdWindow {
  double t_death = 0.0;
  double t_revival = 0.0;
  bool truncated = false;  // runs into t_max; no revival observed in range
};

/// Scans esd_pre_clamp on a grid over [0, t_max] and refines each sign
/// change by bisection to 1e-10. grid_step <= 0 means t_max/4096.
std::vector<EsdWindow> esd_windows(double d, double t_max, double grid_step = 0.0);

struct EsdScanRow {
  double d;
  bool has_death;
  std::size_t windows;
};

/// esd_windows over a list of loop parameters, ordered as given.
std::vector<EsdScanRow> esd_scan(std::span<const double> ds, double t_max, double grid_step = 0.0);

/// Loop parameters in [d_lo, d_hi] where the presence of ESD within
/// [0, t_max] switches, located on a `steps`-point grid and refined by
/// bisection in d.
std::vector<double> esd_region_boundaries(double d_lo, double d_hi, std::size_t steps, double t_max);

}  // namespace tlent
