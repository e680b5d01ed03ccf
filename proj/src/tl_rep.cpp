#include "tlent/tl_rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlent/error.hpp"
#include "tl_rep_detail.hpp"

namespace tlent {

namespace {

constexpr double kNormTol = 1e-12;

struct LoopVisitor {
  double operator()(const family::MaxEntangled& s) const {
    if (s.n < 2) throw Error(ErrorCode::InvalidSpec, "MaxEntangled needs n >= 2");
    if (!s.phases.empty() && s.phases.size() != s.n)
      throw Error(ErrorCode::InvalidSpec, "MaxEntangled phases must have n entries");
    return static_cast<double>(s.n);
  }
  double operator()(const family::TwoDim& s) const {
    if (!(s.q > 0.0) || !std::isfinite(s.q)) throw Error(ErrorCode::InvalidSpec, "TwoDim needs q > 0");
    return s.q + 1.0 / s.q;
  }
  double operator()(const family::ThreeDim& s) const {
    if (!(s.q > 0.0) || !std::isfinite(s.q)) throw Error(ErrorCode::InvalidSpec, "ThreeDim needs q > 0");
    if (s.branch < 1 || s.branch > 3) throw Error(ErrorCode::InvalidSpec, "ThreeDim branch must be 1, 2 or 3");
    return s.q + 1.0 / s.q + 1.0;
  }
};

cplx phase(double k) { return std::polar(1.0, k); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

}  // namespace

AmplitudeMatrix::AmplitudeMatrix(CMatrix alpha) : alpha_(std::move(alpha)) {
  if (!alpha_.is_square() || alpha_.rows() == 0)
    throw Error(ErrorCode::InvalidSpec, "amplitude matrix must be square and nonempty");
  const double norm2 = std::pow(alpha_.frobenius_norm(), 2);
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw Error(ErrorCode::NotNormalized, "Σ|α|² = " + std::to_string(norm2));

  const std::size_t n = alpha_.rows();
  support_.assign(n, n);
  std::vector<int> col_count(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (alpha_(r, c) == cplx{}) continue;
      if (support_[r] != n) throw Error(ErrorCode::InvalidSpec, "row " + std::to_string(r) + " has two nonzeros");
      support_[r] = c;
      ++col_count[c];
    }
    if (support_[r] == n) throw Error(ErrorCode::InvalidSpec, "row " + std::to_string(r) + " is empty");
  }
  if (std::any_of(col_count.begin(), col_count.end(), [](int k) { return k != 1; }))
    throw Error(ErrorCode::InvalidSpec, "columns must each hold exactly one nonzero");
}

AmplitudeMatrix AmplitudeMatrix::from_state(std::span<const cplx> state, std::size_t n) {
  if (state.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "state length must be n²");
  return AmplitudeMatrix(CMatrix(n, n, CVector(state.begin(), state.end())));
}

std::vector<double> AmplitudeMatrix::moduli() const {
  std::vector<double> out(n());
  for (std::size_t r = 0; r < n(); ++r) out[r] = std::abs(alpha_(r, support_[r]));
  return out;
}

CVector AmplitudeMatrix::to_state() const {
  const auto e = alpha_.entries();
  return CVector(e.begin(), e.end());
}

double loop_parameter(const FamilySpec& spec) { return std::visit(LoopVisitor{}, spec); }

std::size_t site_dimension(const FamilySpec& spec) {
  if (const auto* m = std::get_if<family::MaxEntangled>(&spec)) return m->n;
  if (std::holds_alternative<family::TwoDim>(spec)) return 2;
  return 3;
}

CVector build_state(const FamilySpec& spec) {
  loop_parameter(spec);  // validates
  const std::size_t n = site_dimension(spec);
  CVector psi(n * n);
  auto at = [&](std::size_t l, std::size_t m) -> cplx& { return psi[l * n + m]; };

  if (const auto* s = std::get_if<family::MaxEntangled>(&spec)) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t l = 0; l < n; ++l) at(l, l) = amp * phase(s->phases.empty() ? 0.0 : s->phases[l]);
  } else if (const auto* s = std::get_if<family::TwoDim>(&spec)) {
    const double norm = 1.0 / std::sqrt(1.0 + s->q * s->q);
    at(0, 1) = norm * s->q * phase(s->k01);
    at(1, 0) = norm * phase(s->k10);
  } else {
    const auto& t = std::get<family::ThreeDim>(spec);
    const double norm = 1.0 / std::sqrt(1.0 + t.q + t.q * t.q);
    const double rq = std::sqrt(t.q);
    // (column, modulus) of the nonzero entry in each row
    std::array<std::pair<std::size_t, double>, 3> rows;
    switch (t.branch) {
      case 1: rows = {{{2, t.q}, {1, rq}, {0, 1.0}}}; break;
      case 2: rows = {{{1, t.q}, {0, 1.0}, {2, rq}}}; break;
      default: rows = {{{0, rq}, {2, t.q}, {1, 1.0}}}; break;
    }
    for (std::size_t r = 0; r < 3; ++r) at(r, rows[r].first) = norm * rows[r].second * phase(t.phases[r]);
  }
  return psi;
}

TLGenerator build_generator(std::span<const cplx> state, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw Error(ErrorCode::NonPositiveLoop, "d = " + std::to_string(d));
  const double norm2 = inner(state, state).real();
  if (std::abs(norm2 - 1.0) > kNormTol) throw Error(ErrorCode::NotNormalized, "⟨Ψ|Ψ⟩ = " + std::to_string(norm2));
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(state.size()))));
  if (n * n != state.size()) throw Error(ErrorCode::DimensionMismatch, "state length is not a square");
  return TLGenerator{n, d, CMatrix::outer(state, state) * cplx{d}};
}

TLGenerator build_generator(const FamilySpec& spec) { return build_generator(build_state(spec), loop_parameter(spec)); }

double TLResidualReport::max() const { return std::max({square, braid_121, braid_212}); }

TLResidualReport verify_tl_relations(const TLGenerator& gen) {
  const CMatrix id = CMatrix::identity(gen.n);
  const CMatrix u1 = kron(gen.u, id);
  const CMatrix u2 = kron(id, gen.u);
  const cplx d = gen.d;

  TLResidualReport r;
  r.square = std::max(max_abs_diff(u1 * u1, d * u1), max_abs_diff(u2 * u2, d * u2));
  r.braid_121 = max_abs_diff(u1 * u2 * u1, u1);
  r.braid_212 = max_abs_diff(u2 * u1 * u2, u2);
  return r;
}

namespace detail {

QuarticSums quartic_sums(const CMatrix& alpha) {
  const std::size_t n = alpha.rows();
  auto a = [&](std::size_t i, std::size_t j) { return alpha(i, j); };
  auto ac = [&](std::size_t i, std::size_t j) { return std::conj(alpha(i, j)); };

  QuarticSums sums{CMatrix(n, n), CMatrix(n, n)};
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t beta = 0; beta < n; ++beta) {
      cplx first = 0.0;
      cplx second = 0.0;
      for (std::size_t lam = 0; lam < n; ++lam)
        for (std::size_t nu = 0; nu < n; ++nu)
          for (std::size_t sig = 0; sig < n; ++sig) {
            first += ac(nu, lam) * a(lam, mu) * a(nu, sig) * ac(sig, beta);
            second += a(mu, lam) * ac(lam, nu) * ac(beta, sig) * a(sig, nu);
          }
      sums.first(mu, beta) = first;
      sums.second(mu, beta) = second;
    }
  return sums;
}

}  // namespace detail

ConstraintReport verify_constraints(const AmplitudeMatrix& alpha, double d) {
  const std::size_t n = alpha.n();
  const auto sums = detail::quartic_sums(alpha.alpha());
  const double d2 = d * d;

  ConstraintReport report;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t beta = 0; beta < n; ++beta) {
      const double delta = mu == beta ? 1.0 : 0.0;
      report.first = std::max(report.first, std::abs(d2 * sums.first(mu, beta) - delta));
      report.second = std::max(report.second, std::abs(d2 * sums.second(mu, beta) - delta));
    }
  return report;
}

}  // namespace tlent
