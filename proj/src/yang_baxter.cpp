#include "tlent/yang_baxter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlent/error.hpp"

namespace tlent {

namespace {

double generator_q(const TLGenerator& gen) {
  if (gen.n != 2 || gen.u.rows() != 4) throw Error(ErrorCode::InvalidSpec, "Yang-Baxterization needs an n=2 generator");
  const double q = gen.u(1, 1).real();
  if (!(q > 0.0) || std::abs(q + 1.0 / q - gen.d) > 1e-9 * gen.d)
    throw Error(ErrorCode::InvalidSpec, "generator is not in the TwoDim family (U(01,01) != q with d = q + 1/q)");
  return q;
}

UnitarityReport unitarity_impl(double q, const CMatrix& u, std::span<const cplx> xs, bool skip_trivial) {
  UnitarityReport rep;
  const CMatrix id = CMatrix::identity(4);
  for (const cplx x : xs) {
    const cplx x_inv = 1.0 / x;
    try {
      const BraidOperator b = yang_baxterize(q, u, x);
      const BraidOperator b_rev = yang_baxterize(q, u, x_inv);
      const BraidOperator b_neg = yang_baxterize(q, u, -x);
      rep.dagger_vs_inverse = std::max(rep.dagger_vs_inverse, distance(b.r.adjoint(), b.inverse));
      rep.inverse_vs_reversed = std::max(rep.inverse_vs_reversed, distance(b.inverse, b_rev.r));
      rep.inverse_vs_negated = std::max(rep.inverse_vs_negated, distance(b.inverse, b_neg.r));
      rep.product_vs_identity = std::max(rep.product_vs_identity, distance(b.r * b.inverse, id));
    } catch (const Error& e) {
      if (skip_trivial && e.code() == ErrorCode::SingularNormalization && std::abs(x - x_inv) < 1e-15) continue;
      throw;
    }
  }
  return rep;
}

}  // namespace

BraidOperator yang_baxterize(double q, const CMatrix& u, cplx x) {
  if (u.rows() != 4 || u.cols() != 4) throw Error(ErrorCode::DimensionMismatch, "R̆ needs a 4x4 U");
  if (!(q > 0.0)) throw Error(ErrorCode::InvalidSpec, "q must be positive");
  if (x == cplx{}) throw Error(ErrorCode::InvalidSpec, "spectral parameter must be nonzero");

  const cplx xi = 1.0 / x;
  const cplx radicand = q * q + 1.0 / (q * q) - (x * x + xi * xi);
  if (std::abs(radicand) < kSingularRadicand)
    throw Error(ErrorCode::SingularNormalization, "q² + q⁻² − (x² + x⁻²) vanishes");
  const cplx norm = 1.0 / std::sqrt(radicand);
  const CMatrix id = CMatrix::identity(4);

  BraidOperator b;
  b.q = q;
  b.d = q + 1.0 / q;
  b.x = x;
  b.normalization = norm;
  b.r = norm * ((q * x - xi / q) * id - (x - xi) * u);
  b.inverse = norm * ((q * xi - x / q) * id + (x - xi) * u);
  return b;
}

BraidOperator yang_baxterize(const TLGenerator& gen, cplx x) { return yang_baxterize(generator_q(gen), gen.u, x); }

double verify_ybe(double q, const CMatrix& u, cplx x, cplx y) {
  const CMatrix id = CMatrix::identity(2);
  const CMatrix rx = yang_baxterize(q, u, x).r;
  const CMatrix ry = yang_baxterize(q, u, y).r;
  const CMatrix rxy = yang_baxterize(q, u, x * y).r;
  const CMatrix lhs = kron(rx, id) * kron(id, rxy) * kron(ry, id);
  const CMatrix rhs = kron(id, ry) * kron(rxy, id) * kron(id, rx);
  return distance(lhs, rhs);
}

double verify_ybe(const TLGenerator& gen, cplx x, cplx y) { return verify_ybe(generator_q(gen), gen.u, x, y); }

double UnitarityReport::max() const {
  return std::max({dagger_vs_inverse, inverse_vs_reversed, product_vs_identity});
}

UnitarityReport verify_unitarity(const TLGenerator& gen, std::span<const double> thetas) {
  std::vector<cplx> xs;
  xs.reserve(thetas.size());
  for (const double t : thetas) xs.push_back(std::polar(1.0, t));
  return unitarity_impl(generator_q(gen), gen.u, xs, true);
}

UnitarityReport unitarity_at(const TLGenerator& gen, std::span<const cplx> xs) {
  return unitarity_impl(generator_q(gen), gen.u, xs, false);
}

}  // namespace tlent
