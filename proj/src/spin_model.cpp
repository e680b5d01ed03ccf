#include "tlent/spin_model.hpp"

#include <cmath>
#include <string>

#include "tlent/error.hpp"
#include "tlent/tl_rep.hpp"
#include "tlent/yang_baxter.hpp"

namespace tlent {

ModelParams ModelParams::from_fields(double B, double J, double g, double d, double phi) {
  return ModelParams{B + J, B - J, g, d, phi};
}

void ModelParams::validate() const {
  for (const double v : {mu1, mu2, g, d, phi})
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidParams, "non-finite model parameter");
  if (d < 2.0) throw Error(ErrorCode::LoopOutOfDomain, "d = " + std::to_string(d) + " < 2");
  if (B() < 0.0) throw Error(ErrorCode::InvalidParams, "B = " + std::to_string(B()) + " < 0");
}

double inhomogeneity(double d) { return 1.0 - 8.0 / (d * d); }

double flip_flop(double d) {
  if (d < 2.0) throw Error(ErrorCode::LoopOutOfDomain, "d = " + std::to_string(d) + " < 2");
  return 4.0 * std::sqrt(d * d - 4.0) / (d * d);
}

double q_for_loop(double d) {
  if (d < 2.0) throw Error(ErrorCode::LoopOutOfDomain, "d = " + std::to_string(d) + " < 2");
  // Written to avoid cancellation in (d − √(d²−4))/2 for large d.
  return 2.0 / (d + std::sqrt(d * d - 4.0));
}

CMatrix build_h0(const ModelParams& p) {
  const double B = p.B();
  const double J = p.J();
  const std::array<double, 4> diag{B + p.g / 4, J - p.g / 4, -J - p.g / 4, -B + p.g / 4};
  return CMatrix::diagonal(std::span<const double>(diag));
}

SpinHamiltonian conjugated_hamiltonian(const ModelParams& p) {
  p.validate();
  const TLGenerator gen = build_generator(family::TwoDim{q_for_loop(p.d), p.phi, 0.0});
  const BraidOperator braid = yang_baxterize(gen, cplx{0.0, 1.0});
  CMatrix h = braid.r * build_h0(p) * braid.inverse;
  // Conjugation by a unitary; drop the O(ε) anti-Hermitian round-off.
  h = (h + h.adjoint()) * cplx{0.5};
  return {p, std::move(h)};
}

SpinHamiltonian analytic_hamiltonian(const ModelParams& p) {
  p.validate();
  const double B = p.B();
  const double J = p.J();
  const double s = inhomogeneity(p.d);
  const cplx coupling = -J * flip_flop(p.d) * std::polar(1.0, p.phi);

  CMatrix h(4, 4);
  h(0, 0) = B + p.g / 4;
  h(1, 1) = J * s - p.g / 4;
  h(2, 2) = -J * s - p.g / 4;
  h(3, 3) = -B + p.g / 4;
  h(1, 2) = coupling;  // ⟨01|S₁⁺S₂⁻|10⟩ = 1
  h(2, 1) = std::conj(coupling);
  return {p, std::move(h)};
}

EigenSystem eigensystem(const ModelParams& p) {
  p.validate();
  const double B = p.B();
  const double J = p.J();
  const double root = std::sqrt(p.d * p.d - 4.0);
  const double pre = 2.0 / p.d;
  const cplx e = std::polar(1.0, p.phi);

  EigenSystem out;
  out.energies = {B + p.g / 4, -B + p.g / 4, J - p.g / 4, -J - p.g / 4};
  out.states[0] = {1.0, 0.0, 0.0, 0.0};
  out.states[1] = {0.0, 0.0, 0.0, 1.0};
  out.states[2] = {0.0, pre * (-0.5 * root * e), pre, 0.0};
  out.states[3] = {0.0, pre, pre * (0.5 * root * std::conj(e)), 0.0};
  return out;
}

}  // namespace tlent
