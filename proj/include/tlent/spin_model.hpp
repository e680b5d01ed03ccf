#pragma once

#include <array>

#include "tlent/linalg.hpp"

namespace tlent {

// Spin convention: |0⟩ has S^z = +1/2. ħ = k_B = 1.
struct ModelParams {
  double mu1 = 0.0;  // field on spin 1
  double mu2 = 0.0;  // field on spin 2
  double g = 0.0;    // S₁^z S₂^z coupling
  double d = 2.0;    // loop parameter, d >= 2
  double phi = 0.0;  // flip-flop phase

  static ModelParams from_fields(double B, double J, double g, double d, double phi);

  double B() const { return 0.5 * (mu1 + mu2); }
  double J() const { return 0.5 * (mu1 - mu2); }

  // Throws LoopOutOfDomain for d < 2 and InvalidParams for B < 0 or non-finite input.
  void validate() const;
};

// 1 − 8/d²: inhomogeneity factor of the conjugated Zeeman term.
double inhomogeneity(double d);
// 4√(d²−4)/d²: flip-flop amplitude per unit J, also the zero-temperature C_max.
double flip_flop(double d);
// The q <= 1 root of q + 1/q = d.
double q_for_loop(double d);

struct SpinHamiltonian {
  ModelParams params;
  CMatrix h;
};

/// H₀ = μ₁S₁^z + μ₂S₂^z + g S₁^zS₂^z = diag(B+g/4, J−g/4, −J−g/4, −B+g/4).
CMatrix build_h0(const ModelParams& params);

/// R̆(i) H₀ R̆(i)⁻¹ with R̆ Yang-Baxterized from the TwoDim generator at
/// q = q_for_loop(d) and U(01,10) = e^{iφ}.
SpinHamiltonian conjugated_hamiltonian(const ModelParams& params);

/// The same operator written out:
///   (B + J(1−8/d²))S₁^z + (B − J(1−8/d²))S₂^z + g S₁^zS₂^z
///   − (4J√(d²−4)/d²)(e^{iφ}S₁⁺S₂⁻ + e^{−iφ}S₁⁻S₂⁺)
SpinHamiltonian analytic_hamiltonian(const ModelParams& params);

struct EigenSystem {
  std::array<double, 4> energies{};  // E₁..E₄
  std::array<CVector, 4> states;     // Ψ₁..Ψ₄
};

/// Ψ₁ = |00⟩, Ψ₂ = |11⟩,
/// Ψ₃ = (2/d)(−(√(d²−4)e^{iφ}/2)|01⟩ + |10⟩), Ψ₄ = (2/d)(|01⟩ + (√(d²−4)e^{−iφ}/2)|10⟩)
/// with E = (B+g/4, −B+g/4, J−g/4, −J−g/4).
EigenSystem eigensystem(const ModelParams& params);

}  // namespace tlent
