#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "tlent/entanglement.hpp"
#include "tlent/error.hpp"
#include "tlent/spin_model.hpp"

using namespace tlent;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt8 = 2.0 * std::numbers::sqrt2;

// Written out in the spin operators, independently of the library's layout.
CMatrix spin_oracle(double B, double J, double g, double d, double phi) {
  const CMatrix sz{{0.5, 0}, {0, -0.5}};
  const CMatrix sp{{0, 1}, {0, 0}};
  const CMatrix sm{{0, 0}, {1, 0}};
  const CMatrix id = CMatrix::identity(2);
  const double a = 1.0 - 8.0 / (d * d);
  const double c = 4.0 * J * std::sqrt(d * d - 4.0) / (d * d);
  return kron(sz, id) * cplx{B + J * a} + kron(id, sz) * cplx{B - J * a} + kron(sz, sz) * cplx{g} -
         (kron(sp, sm) * std::polar(1.0, phi) + kron(sm, sp) * std::polar(1.0, -phi)) * cplx{c};
}

ModelParams random_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return ModelParams::from_fields(3.0 * u(rng), 4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0, 2.0 + 18.0 * u(rng),
                                  2.0 * kPi * u(rng) - kPi);
}

}  // namespace

TEST_CASE("parameter helpers") {
  const ModelParams p = ModelParams::from_fields(2.0, 1.0, 0.5, 3.0, 0.0);
  CHECK(p.mu1 == 3.0);
  CHECK(p.mu2 == 1.0);
  CHECK(p.B() == 2.0);
  CHECK(p.J() == 1.0);
  CHECK(inhomogeneity(kSqrt8) == doctest::Approx(0.0));
  CHECK(flip_flop(kSqrt8) == doctest::Approx(1.0));
  CHECK(flip_flop(2.0) == 0.0);
  for (const double d : {2.0, 2.5, 4.0, 10.0}) {
    const double q = q_for_loop(d);
    CHECK(q <= 1.0);
    CHECK(q + 1.0 / q == doctest::Approx(d));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(ModelParams::from_fields(0.0, 1.0, 1.0, 1.9, 0.0).validate(), Error);
  CHECK_THROWS_AS(ModelParams::from_fields(-1.0, 1.0, 1.0, 3.0, 0.0).validate(), Error);
  CHECK_THROWS_AS(ModelParams::from_fields(0.0, NAN, 1.0, 3.0, 0.0).validate(), Error);
  try {
    ModelParams::from_fields(0.0, 1.0, 1.0, 1.5, 0.0).validate();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopOutOfDomain);
  }
  CHECK_THROWS_AS(conjugated_hamiltonian(ModelParams::from_fields(0.0, 1.0, 1.0, 1.5, 0.0)), Error);
}

TEST_CASE("H0 examples") {
  ModelParams p;
  CHECK(build_h0(p).max_abs() == 0.0);
  p.mu1 = 1.0;
  p.mu2 = 1.0;
  const std::vector<double> zeeman{1.0, 0.0, 0.0, -1.0};
  CHECK(distance(build_h0(p), CMatrix::diagonal(zeeman)) <= 1e-15);
  p.mu1 = 3.0;
  p.mu2 = 1.0;
  p.g = 2.0;
  const std::vector<double> both{2.5, 0.5, -1.5, -1.5};
  CHECK(distance(build_h0(p), CMatrix::diagonal(both)) <= 1e-15);
}

TEST_CASE("conjugated Hamiltonian special cases") {
  const double B = 0.7, J = 1.3, g = 0.4;
  const CMatrix h2 = conjugated_hamiltonian(ModelParams::from_fields(B, J, g, 2.0, 0.3)).h;
  CHECK(std::abs(h2(1, 1) - (-J - g / 4)) <= 1e-10);
  CHECK(std::abs(h2(2, 2) - (J - g / 4)) <= 1e-10);
  CHECK(std::abs(h2(1, 2)) <= 1e-10);

  const double phi = 0.8;
  const CMatrix h8 = conjugated_hamiltonian(ModelParams::from_fields(B, J, g, kSqrt8, phi)).h;
  CHECK(std::abs(h8(1, 1) - (-g / 4)) <= 1e-10);
  CHECK(std::abs(h8(2, 2) - (-g / 4)) <= 1e-10);
  CHECK(std::abs(h8(1, 2) + J * std::polar(1.0, phi)) <= 1e-10);

  std::mt19937 rng(41);
  for (int k = 0; k < 10; ++k) {
    const ModelParams p = random_params(rng);
    const CMatrix h = conjugated_hamiltonian(p).h;
    CHECK(std::abs(h(0, 0) - (p.B() + p.g / 4)) <= 1e-10);
    CHECK(hermiticity_defect(h) <= 1e-12);
    for (const auto& [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}) CHECK(std::abs(h(i, j)) <= 1e-12);
  }
}

TEST_CASE("analytic and conjugated Hamiltonians agree with the spin-operator oracle") {
  std::mt19937 rng(42);
  for (int k = 0; k < 100; ++k) {
    const ModelParams p = random_params(rng);
    const CMatrix numeric = conjugated_hamiltonian(p).h;
    const CMatrix analytic = analytic_hamiltonian(p).h;
    const CMatrix oracle = spin_oracle(p.B(), p.J(), p.g, p.d, p.phi);
    CHECK(distance(numeric, analytic) <= 1e-10);
    CHECK(distance(analytic, oracle) <= 1e-12);

    // Conjugation preserves the spectrum of H₀.
    const HermEig e = hermitian_eig(numeric);
    const HermEig e0 = hermitian_eig(build_h0(p));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(e.values[i] - e0.values[i]) <= 1e-10);
  }
}

TEST_CASE("φ = π gives a positive real XXZ flip-flop") {
  const CMatrix h = analytic_hamiltonian(ModelParams::from_fields(1.0, 0.8, 0.5, 3.0, kPi)).h;
  CHECK(h(1, 2).real() > 0.0);
  CHECK(std::abs(h(1, 2).imag()) <= 1e-15);
  CHECK(h(2, 1).real() > 0.0);
}

TEST_CASE("eigensystem") {
  std::mt19937 rng(43);
  for (int k = 0; k < 50; ++k) {
    const ModelParams p = random_params(rng);
    const EigenSystem es = eigensystem(p);
    const CMatrix h = conjugated_hamiltonian(p).h;
    const std::array<double, 4> expected{p.B() + p.g / 4, -p.B() + p.g / 4, p.J() - p.g / 4, -p.J() - p.g / 4};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(es.energies[i] == doctest::Approx(expected[i]));
      const CVector hv = h * es.states[i];
      double res = 0.0;
      for (std::size_t r = 0; r < 4; ++r) res = std::max(res, std::abs(hv[r] - es.energies[i] * es.states[i][r]));
      CHECK(res <= 1e-10);
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(inner(es.states[i], es.states[j]) - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }
    const double cm = flip_flop(p.d);
    CHECK(std::abs(generalized_concurrence(es.states[2], 2).value - cm) <= 1e-7);
    CHECK(std::abs(generalized_concurrence(es.states[3], 2).value - cm) <= 1e-7);
    CHECK(std::abs(wootters_concurrence(CMatrix::outer(es.states[2], es.states[2])).value - cm) <= 1e-10);
  }
}

TEST_CASE("eigenstates at the special loop parameters") {
  const double r2 = 1.0 / std::sqrt(2.0);
  const EigenSystem e8 = eigensystem(ModelParams::from_fields(0.5, 1.0, 0.2, kSqrt8, kPi));
  CHECK(std::abs(std::abs(e8.states[2][1]) - r2) <= 1e-12);
  CHECK(std::abs(std::abs(e8.states[2][2]) - r2) <= 1e-12);
  CHECK(std::abs(std::abs(e8.states[3][1]) - r2) <= 1e-12);

  const EigenSystem e2 = eigensystem(ModelParams::from_fields(0.5, 1.0, 0.2, 2.0, kPi));
  CHECK(std::abs(std::abs(e2.states[2][2]) - 1.0) <= 1e-12);  // |10⟩
  CHECK(std::abs(std::abs(e2.states[3][1]) - 1.0) <= 1e-12);  // |01⟩
  CHECK(std::abs(e2.states[2][0]) == 0.0);
  CHECK(wootters_concurrence(CMatrix::outer(e2.states[3], e2.states[3])).value <= 1e-12);
}
