#include "tlent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "tlent/error.hpp"

namespace tlent {

namespace {

constexpr double kRadicandFloor = 1e-12;

void require_normalized(std::span<const cplx> state, std::size_t n) {
  if (n < 2 || state.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "expected a state of length n² with n >= 2");
  const double norm2 = inner(state, state).real();
  if (std::abs(norm2 - 1.0) > kTolerance)
    throw Error(ErrorCode::NotNormalized, "⟨Ψ|Ψ⟩ = " + std::to_string(norm2));
}

}  // namespace

double guarded_sqrt(double radicand) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandFloor) return 0.0;
  throw Error(ErrorCode::NumericError, "negative radicand " + std::to_string(radicand));
}

SchmidtSpectrum schmidt(std::span<const cplx> state, std::size_t n) {
  require_normalized(state, n);
  const CMatrix rho = CMatrix::outer(state, state);
  const HermEig eig = hermitian_eig(partial_trace(rho, n, n, Keep::A));

  SchmidtSpectrum out;
  out.coefficients.reserve(n);
  for (const double p : eig.values) out.coefficients.push_back(guarded_sqrt(p));
  std::sort(out.coefficients.begin(), out.coefficients.end(), std::greater<>());
  out.purity = 0.0;
  for (const double k : out.coefficients) out.purity += k * k * k * k;
  return out;
}

ConcurrenceValue generalized_concurrence(std::span<const cplx> state, std::size_t n) {
  const SchmidtSpectrum s = schmidt(state, n);
  const double dn = static_cast<double>(n);
  const double c = guarded_sqrt(dn / (dn - 1.0) * (1.0 - s.purity));
  return {std::min(c, 1.0), ConcurrenceMethod::Generalized};
}

CMatrix spin_flip() {
  return CMatrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
}

ConcurrenceValue wootters_concurrence(const CMatrix& rho, double tol) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(ErrorCode::NotDensityMatrix, "expected a 4x4 matrix");
  if (!rho.all_finite()) throw Error(ErrorCode::NotDensityMatrix, "non-finite entries");
  if (hermiticity_defect(rho) > tol) throw Error(ErrorCode::NotDensityMatrix, "not Hermitian");
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > tol) throw Error(ErrorCode::NotDensityMatrix, "trace " + std::to_string(tr.real()));

  const HermEig spectrum = hermitian_eig(rho);
  if (spectrum.values.front() < -tol) throw Error(ErrorCode::NotDensityMatrix, "not positive semidefinite");

  // √λ_i are the singular values of √ρ·√ρ̃ with √ρ̃ = Y √ρ* Y. They are read
  // off the Hermitian embedding [[0, A], [A†, 0]] (eigenvalues ±σ_i), which
  // keeps small σ_i accurate in absolute terms; squaring them into λ_i and
  // taking roots again would cost half the digits.
  CVector root(4);
  for (std::size_t k = 0; k < 4; ++k) root[k] = std::sqrt(std::max(spectrum.values[k], 0.0));
  const CMatrix sqrt_rho = reconstruct(spectrum, root);
  const CMatrix flip = spin_flip();
  const CMatrix a = sqrt_rho * (flip * sqrt_rho.conj() * flip);
  CMatrix embed(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      embed(i, 4 + j) = a(i, j);
      embed(4 + j, i) = std::conj(a(i, j));
    }
  const HermEig sv = hermitian_eig(embed);

  std::vector<double> s(sv.values.begin() + 4, sv.values.end());
  for (auto& v : s) v = std::max(v, 0.0);
  std::sort(s.begin(), s.end(), std::greater<>());
  const double c = s[0] - s[1] - s[2] - s[3];
  return {std::clamp(c, 0.0, 1.0), ConcurrenceMethod::Wootters};
}

}  // namespace tlent
