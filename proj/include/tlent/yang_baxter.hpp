#pragma once

#include <span>

#include "tlent/linalg.hpp"
#include "tlent/tl_rep.hpp"

namespace tlent {

/// Trigonometric Yang–Baxterization of the two-qubit TL generator:
///   R̆(x)  = N·[(q x − q⁻¹x⁻¹) I − (x − x⁻¹) U]
///   R̆⁻¹(x) = N·[(q x⁻¹ − q⁻¹x) I + (x − x⁻¹) U]
/// with N = [q² + q⁻² − (x² + x⁻²)]^{−1/2} on the principal branch.
struct BraidOperator {
  double q = 1.0;
  double d = 2.0;
  cplx x = 1.0;
  cplx normalization = 1.0;
  CMatrix r;
  CMatrix inverse;  // closed form, not a numerical inverse
};

// |radicand| below this is SingularNormalization.
inline constexpr double kSingularRadicand = 1e-12;

/// q is read off the generator as U(|01⟩,|01⟩), which is the TwoDim family's
/// convention. Throws InvalidSpec for generators outside that family,
/// SingularNormalization when the radicand vanishes.
BraidOperator yang_baxterize(const TLGenerator& gen, cplx x);

/// Same formula for an arbitrary 4×4 matrix in place of U (no TL check).
BraidOperator yang_baxterize(double q, const CMatrix& u, cplx x);

/// ‖R̆₁(x)R̆₂(xy)R̆₁(y) − R̆₂(y)R̆₁(xy)R̆₂(x)‖_F with R̆₁ = R̆⊗1, R̆₂ = 1⊗R̆.
double verify_ybe(const TLGenerator& gen, cplx x, cplx y);
double verify_ybe(double q, const CMatrix& u, cplx x, cplx y);

struct UnitarityReport {
  double dagger_vs_inverse = 0.0;    // max ‖R̆† − R̆⁻¹‖_F
  double inverse_vs_reversed = 0.0;  // max ‖R̆⁻¹(x) − R̆(x⁻¹)‖_F, i.e. θ → −θ
  double inverse_vs_negated = 0.0;   // max ‖R̆⁻¹(x) − R̆(−x)‖_F, informational
  double product_vs_identity = 0.0;  // max ‖R̆ R̆⁻¹ − I‖_F

  double max() const;  // excludes the informational column
  bool pass(double tol = kTolerance) const { return max() <= tol; }
};

/// Checks unitarity on x = e^{iθ}. Points with sin θ = 0 make the U term
/// vanish; they contribute zero and are skipped when their normalization is
/// singular (q = 1).
UnitarityReport verify_unitarity(const TLGenerator& gen, std::span<const double> thetas);

/// Same identities evaluated at arbitrary spectral parameters (off the unit
/// circle R̆† = R̆⁻¹ is expected to fail).
UnitarityReport unitarity_at(const TLGenerator& gen, std::span<const cplx> xs);

}  // namespace tlent
