#pragma once

#include <cstddef>
#include <vector>

#include "tlent/linalg.hpp"

namespace tlent {

struct SchmidtSpectrum {
  std::vector<double> coefficients;  // κ_j, descending
  double purity = 1.0;               // Σκ_j⁴ = Tr ρ_A²
};

enum class ConcurrenceMethod { Generalized, Wootters };

struct ConcurrenceValue {
  double value = 0.0;
  ConcurrenceMethod method = ConcurrenceMethod::Generalized;
};

/// Schmidt coefficients of a normalized two-qudit pure state of length n².
/// κ_j² are the eigenvalues of ρ_A = Tr_B|Ψ⟩⟨Ψ|. Throws NotNormalized.
SchmidtSpectrum schmidt(std::span<const cplx> state, std::size_t n);

/// √(n/(n−1)·(1 − Σκ_j⁴)); 1 for maximally entangled states, 0 for products.
ConcurrenceValue generalized_concurrence(std::span<const cplx> state, std::size_t n);

/// Two-qubit spin-flip operator σ_y ⊗ σ_y in the standard basis.
CMatrix spin_flip();

/// max(0, √λ₁ − √λ₂ − √λ₃ − √λ₄) with λ the descending eigenvalues of
/// ρ(σ_y⊗σ_y)ρ*(σ_y⊗σ_y), ρ* conjugated in {|00⟩,|01⟩,|10⟩,|11⟩}.
///
/// Throws NotDensityMatrix unless ρ is 4×4, Hermitian, PSD and unit trace
/// within tol.
ConcurrenceValue wootters_concurrence(const CMatrix& rho, double tol = kTolerance);

// Square root guarded against round-off: radicands in [−1e-12, 0) give 0,
// more negative ones throw NumericError.
double guarded_sqrt(double radicand);

}  // namespace tlent
