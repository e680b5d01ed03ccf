#pragma once

// Temperley–Lieb generators in projector form U = d|Ψ⟩⟨Ψ| built from
// two-qudit states whose amplitude matrix has one nonzero entry per row
// and per column.

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "tlent/linalg.hpp"

namespace tlent {

/// α_{λμ} for |Ψ⟩ = Σ α_{λμ}|λ⟩|μ⟩. Always normalized and permutation-supported.
class AmplitudeMatrix {
 public:
  // Throws NotNormalized or InvalidSpec when the invariants fail.
  explicit AmplitudeMatrix(CMatrix alpha);

  static AmplitudeMatrix from_state(std::span<const cplx> state, std::size_t n);

  std::size_t n() const noexcept { return alpha_.rows(); }
  const CMatrix& alpha() const noexcept { return alpha_; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return alpha_(row, col); }

  // support()[λ] is the column of the nonzero entry in row λ.
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  // |α_{λ, support(λ)}|
  std::vector<double> moduli() const;
  CVector to_state() const;

 private:
  CMatrix alpha_;
  std::vector<std::size_t> support_;
};

struct TLGenerator {
  std::size_t n = 0;
  double d = 0.0;
  CMatrix u;
};

namespace family {

// Σ_λ n^{-1/2} e^{i k_λλ}|λλ⟩ with d = n. Empty phases mean all zero.
struct MaxEntangled {
  std::size_t n = 2;
  std::vector<double> phases;
};

// (1+q²)^{-1/2}(q e^{i k01}|01⟩ + e^{i k10}|10⟩), d = q + 1/q.
struct TwoDim {
  double q = 1.0;
  double k01 = 0.0;
  double k10 = 0.0;
};

// Three qutrit solutions with d = q + 1/q + 1, prefactor (1+q+q²)^{-1/2}:
//   branch 1: q|02⟩ + √q|11⟩ + |20⟩
//   branch 2: q|01⟩ + |10⟩ + √q|22⟩
//   branch 3: √q|00⟩ + q|12⟩ + |21⟩
// phases[r] multiplies the nonzero amplitude in row r.
struct ThreeDim {
  int branch = 1;
  double q = 1.0;
  std::array<double, 3> phases{};
};

}  // namespace family

using FamilySpec = std::variant<family::MaxEntangled, family::TwoDim, family::ThreeDim>;

/// Loop parameter of a family member. Throws InvalidSpec on bad parameters.
double loop_parameter(const FamilySpec& spec);
std::size_t site_dimension(const FamilySpec& spec);

/// The closed-form projective state of a family member (length n²).
CVector build_state(const FamilySpec& spec);

/// U = d|Ψ⟩⟨Ψ|, entrywise d·α_{λμ}·conj(α_{λ'μ'}).
///
/// Throws NotNormalized when |⟨Ψ|Ψ⟩ − 1| > 1e-12 and NonPositiveLoop for d ≤ 0.
TLGenerator build_generator(std::span<const cplx> state, double d);

TLGenerator build_generator(const FamilySpec& spec);

struct TLResidualReport {
  double square = 0.0;    // max(‖U₁² − dU₁‖, ‖U₂² − dU₂‖), max-abs entry
  double braid_121 = 0.0;  // ‖U₁U₂U₁ − U₁‖
  double braid_212 = 0.0;  // ‖U₂U₁U₂ − U₂‖

  double max() const;
  bool pass(double tol = kTolerance) const { return max() <= tol; }
};

/// Embeds U₁ = U⊗1 and U₂ = 1⊗U on three sites and measures the TL relations.
TLResidualReport verify_tl_relations(const TLGenerator& gen);

struct ConstraintReport {
  double first = 0.0;   // max_{μβ} |d² Σ ᾱ_{νλ}α_{λμ}α_{νσ}ᾱ_{σβ} − δ_{μβ}|
  double second = 0.0;  // max_{μβ} |d² Σ α_{μλ}ᾱ_{λν}ᾱ_{βσ}α_{σν} − δ_{μβ}|

  double max() const { return first > second ? first : second; }
  bool pass(double tol = kTolerance) const { return max() <= tol; }
};

/// Evaluates the two quartic amplitude conditions equivalent to U_iU_{i±1}U_i = U_i.
ConstraintReport verify_constraints(const AmplitudeMatrix& alpha, double d);

// --- numerical search for new solutions -------------------------------------

struct SolverOptions {
  int starts = 32;
  int max_iterations = 200;
  double accept_residual = 1e-9;
  double dedup_tol = 1e-8;
  unsigned seed = 20100315u;
};

struct ConstraintSolution {
  AmplitudeMatrix alpha;
  double d;
  double residual;  // ConstraintReport::max() at the solution
};

/// Multistart damped Gauss–Newton search for real positive moduli on the
/// support α_{λ, perm[λ]} that satisfy the quartic conditions. When d is
/// nullopt it is solved for as well.
///
/// Results are deduplicated (moduli and d within dedup_tol) and sorted
/// lexicographically by moduli. Throws InvalidPermutation.
std::vector<ConstraintSolution> solve_constraints(std::size_t n, std::span<const std::size_t> perm,
                                                  std::optional<double> d, const SolverOptions& options = {});

}  // namespace tlent
