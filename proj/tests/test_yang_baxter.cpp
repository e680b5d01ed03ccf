#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "tlent/error.hpp"
#include "tlent/yang_baxter.hpp"

using namespace tlent;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

TLGenerator two_dim(double q, double phi = 0.0) { return build_generator(family::TwoDim{q, phi, 0.0}); }

std::vector<cplx> unit_circle(int count, double offset) {
  std::vector<cplx> xs;
  for (int k = 0; k < count; ++k) xs.push_back(std::polar(1.0, offset + 2.0 * kPi * k / count));
  return xs;
}

}  // namespace

TEST_CASE("x = 1 gives ±I") {
  for (const double q : {0.5, 2.0, 4.0}) {
    const BraidOperator b = yang_baxterize(two_dim(q), 1.0);
    const double sign = b.r(0, 0).real() > 0 ? 1.0 : -1.0;
    CHECK(distance(b.r, CMatrix::identity(4) * cplx{sign}) <= 1e-12);
    CHECK(verify_ybe(two_dim(q), 1.0, 1.0) <= 1e-14);
  }
}

TEST_CASE("x = i is i(I - 2U/d)") {
  for (const double q : {0.5, 1.0, 2.0, 4.0}) {
    const TLGenerator g = two_dim(q, 0.9);
    const BraidOperator b = yang_baxterize(g, kI);
    const CMatrix expected = (CMatrix::identity(4) - g.u * cplx{2.0 / g.d}) * kI;
    CHECK(distance(b.r, expected) <= 1e-12);
    CHECK(distance(b.r * b.r, CMatrix::identity(4) * cplx{-1.0}) <= 1e-10);
  }
  const double phi = 0.4;
  const BraidOperator b1 = yang_baxterize(two_dim(1.0, phi), kI);
  CHECK(std::abs(b1.r(0, 0) - kI) <= 1e-14);
  CHECK(std::abs(b1.r(3, 3) - kI) <= 1e-14);
  CHECK(std::abs(b1.r(1, 1)) <= 1e-14);
  CHECK(std::abs(b1.r(1, 2) - kI * -std::polar(1.0, phi)) <= 1e-14);
  CHECK(std::abs(b1.r(2, 1) - kI * -std::polar(1.0, -phi)) <= 1e-14);
}

TEST_CASE("closed-form inverse matches a numerical inverse") {
  for (const double q : {0.5, 1.5, 2.0, 4.0})
    for (const cplx x : {std::polar(1.0, 0.3), std::polar(1.0, 2.1), cplx{1.3, 0.0}, cplx{0.4, 0.7}}) {
      const BraidOperator b = yang_baxterize(two_dim(q, 0.2), x);
      CHECK(distance(b.inverse, testing::eigen_inverse(b.r)) <= 1e-10);
      CHECK(distance(b.r * b.inverse, CMatrix::identity(4)) <= 1e-10);
    }
}

TEST_CASE("Yang-Baxter equation on a 5x5 unit-circle grid") {
  for (const double q : {0.5, 1.0, 2.0, 4.0}) {
    const TLGenerator g = two_dim(q, 1.1);
    for (const cplx x : unit_circle(5, 0.21))
      for (const cplx y : unit_circle(5, 0.57)) CHECK(verify_ybe(g, x, y) <= 1e-10);
  }
  CHECK(verify_ybe(two_dim(2.0), std::polar(1.0, 0.3), std::polar(1.0, 0.7)) <= 1e-10);
}

TEST_CASE("YBE detector fires for a non-TL matrix") {
  CMatrix junk(4, 4);
  junk(0, 1) = 1.0;
  junk(1, 0) = 1.0;
  junk(2, 2) = 3.0;
  CHECK(verify_ybe(2.0, junk, std::polar(1.0, 0.3), std::polar(1.0, 0.7)) > 1e-3);
}

TEST_CASE("unitarity on the unit circle") {
  std::vector<double> thetas;
  for (int k = 0; k <= 24; ++k) thetas.push_back(-kPi + 2.0 * kPi * k / 24.0);
  for (const double q : {0.5, 1.0, 1.5, 2.0, 4.0}) {
    const UnitarityReport r = verify_unitarity(two_dim(q, 0.6), thetas);
    CHECK(r.pass());
    CHECK(r.dagger_vs_inverse <= 1e-10);
    CHECK(r.inverse_vs_reversed <= 1e-10);
    CHECK(r.product_vs_identity <= 1e-10);
  }
  const std::vector<double> half_pi{kPi / 2};
  CHECK(verify_unitarity(two_dim(1.5), half_pi).pass());
  const std::vector<double> zero{0.0};
  const UnitarityReport z = verify_unitarity(two_dim(1.0), zero);
  CHECK(z.max() == 0.0);
}

TEST_CASE("negated spectral parameter is not the inverse") {
  // R̆(−x) = −R̆(x) up to the normalization branch, so it cannot equal R̆(x)⁻¹.
  const std::vector<double> thetas{0.3, 1.1};
  const UnitarityReport r = verify_unitarity(two_dim(2.0), thetas);
  CHECK(r.inverse_vs_negated > 0.1);
  CHECK(r.pass());
}

TEST_CASE("off the unit circle R† differs from R⁻¹") {
  const std::vector<cplx> xs{cplx{1.3, 0.0}};
  const UnitarityReport r = unitarity_at(two_dim(2.0), xs);
  CHECK(r.dagger_vs_inverse > 1e-3);
  CHECK(r.product_vs_identity <= 1e-10);
}

TEST_CASE("errors") {
  // q = 1, x = 1: radicand q² + q⁻² − 2 vanishes.
  try {
    yang_baxterize(two_dim(1.0), 1.0);
    FAIL("expected SingularNormalization");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularNormalization);
  }
  CHECK_THROWS_AS(yang_baxterize(build_generator(family::MaxEntangled{3, {}}), kI), Error);
  TLGenerator mismatched = two_dim(2.0);
  mismatched.d = 3.0;
  CHECK_THROWS_AS(yang_baxterize(mismatched, kI), Error);
}
