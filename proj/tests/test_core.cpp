#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "majorana/field.hpp"
#include "majorana/operators.hpp"
#include "majorana/physics.hpp"
#include "majorana/representation.hpp"

using namespace majorana;

namespace {

Matrix2c mat(cplx a, cplx b, cplx c, cplx d) {
  Matrix2c m;
  m << a, b, c, d;
  return m;
}

double max_abs(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

SpinorField constant_field(const std::vector<double>& grid, Spinor v) {
  return SpinorField::sample(grid, [&](double) { return v; });
}

}  // namespace

TEST(Representation, StandardMatricesMatchHandValues) {
  const auto g = make_representation(Representation::standard);
  EXPECT_EQ(max_abs(g.gamma0 - mat(0.0, -I, I, 0.0)), 0.0);
  EXPECT_EQ(max_abs(g.gamma1 - mat(-I, 0.0, 0.0, I)), 0.0);
  EXPECT_EQ(max_abs(g.alpha() - mat(0.0, 1.0, 1.0, 0.0)), 0.0);
  EXPECT_EQ(max_abs(g.beta() - mat(0.0, -I, I, 0.0)), 0.0);
}

TEST(Representation, VariantsAreSimilarityTransforms) {
  const auto s = make_representation(Representation::standard);
  const auto p = make_representation(Representation::primed);
  const auto d = make_representation(Representation::double_primed);
  for (int mu = 0; mu < 2; ++mu) {
    EXPECT_EQ(max_abs(p[mu] - pauli::y() * s[mu] * pauli::y()), 0.0);
    EXPECT_EQ(max_abs(d[mu] - pauli::x() * s[mu] * pauli::x()), 0.0);
  }
  EXPECT_EQ(max_abs(d.gamma0 + s.gamma0), 0.0);
}

TEST(Representation, CliffordAndRealityHoldExactly) {
  for (auto v : {Representation::standard, Representation::primed, Representation::double_primed}) {
    const auto g = make_representation(v);
    EXPECT_EQ(clifford_defect(g), 0.0);
    EXPECT_EQ(imaginary_part_of_i_gamma(g), 0.0);
    EXPECT_EQ(g.alpha().imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(g.beta().real().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Representation, UnknownTagIsRejected) {
  EXPECT_EQ(make_representation("primed").variant, Representation::primed);
  EXPECT_THROW(make_representation("dirac"), input_error);
}

TEST(Field, GridValidation) {
  EXPECT_THROW(uniform_grid(0.0, 1.0, 4), input_error);
  EXPECT_THROW(uniform_grid(1.0, 0.0, 5), input_error);
  EXPECT_THROW(SpinorField({0.0, 1.0}, {Spinor{}, Spinor{}}), input_error);
  EXPECT_THROW(SpinorField({0.0, 2.0, 1.0}, std::vector<Spinor>(3)), input_error);
  EXPECT_THROW(SpinorField({0.0, 1.0, 2.0}, std::vector<Spinor>(2)), input_error);
  const auto g = uniform_grid(0.0, 3.0, 7);
  EXPECT_EQ(g.back(), 3.0);
  EXPECT_DOUBLE_EQ(g[1], 0.5);
}

TEST(ChargeConjugation, Examples) {
  const auto grid = uniform_grid(0.0, 1.0, 5);
  const auto psi = constant_field(grid, {1.0, I});
  const auto cc = charge_conjugate(psi);
  for (const auto& v : cc.values()) {
    EXPECT_EQ(v.phi1, cplx(1.0));
    EXPECT_EQ(v.phi2, -I);
  }
  const auto real = constant_field(grid, {0.3, -1.2});
  EXPECT_EQ(charge_conjugate(real).values(), real.values());
  EXPECT_EQ(charge_conjugate(cc).values(), psi.values());
}

TEST(MajoranaDefect, Examples) {
  const auto grid = uniform_grid(0.0, 1.0, 5);
  EXPECT_EQ(majorana_defect(constant_field(grid, {0.4, -2.0}), 0.0), 0.0);
  EXPECT_DOUBLE_EQ(majorana_defect(constant_field(grid, {1.0, I}), 0.0), 2.0);
  const double theta = 0.9;
  const cplx half = std::polar(1.0, theta / 2);
  const auto rotated = constant_field(grid, {half * 0.7, half * -0.2});
  EXPECT_LT(majorana_defect(rotated, theta), 1e-15);
  EXPECT_GT(majorana_defect(rotated, 0.0), 0.1);
}

TEST(InnerProduct, SimpsonIsExactForCubics) {
  const auto grid = uniform_grid(0.0, 2.0, 9);
  const auto f = SpinorField::sample(grid, [](double x) { return Spinor{x * x * x, 0.0}; });
  const auto one = constant_field(grid, {1.0, 0.0});
  EXPECT_NEAR(inner_product(one, f).real(), 4.0, 1e-14);
}

TEST(InnerProduct, ConjugateSymmetricAndPositive) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto grid = uniform_grid(-1.0, 1.0, 101);
  for (int k = 0; k < 20; ++k) {
    std::vector<Spinor> a(grid.size()), b(grid.size());
    for (auto& s : a) s = {cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
    for (auto& s : b) s = {cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
    const SpinorField phi(grid, a), chi(grid, b);
    EXPECT_LT(std::abs(inner_product(phi, chi) - std::conj(inner_product(chi, phi))), 1e-14);
    const cplx self = inner_product(phi, phi);
    EXPECT_EQ(self.imag(), 0.0);
    EXPECT_GT(self.real(), 0.0);
    EXPECT_NEAR(norm(charge_conjugate(phi)), norm(phi), 1e-14);
  }
}

TEST(InnerProduct, MismatchedGridsAreRejected) {
  const auto a = constant_field(uniform_grid(0.0, 1.0, 5), {1.0, 0.0});
  const auto b = constant_field(uniform_grid(0.0, 2.0, 5), {1.0, 0.0});
  EXPECT_THROW(inner_product(a, b), input_error);
}

TEST(Differentiate, StencilOrdersConverge) {
  // d/dx sin on [0, 1]; error must fall by about 2^order when h halves.
  for (int order : {2, 4, 6, 8}) {
    double errors[2];
    for (int r = 0; r < 2; ++r) {
      const std::size_t n = r == 0 ? 41 : 81;
      const auto grid = uniform_grid(0.0, 1.0, n);
      std::vector<cplx> f;
      for (double x : grid) f.push_back(std::sin(3.0 * x));
      const auto d = differentiate(f, grid[1] - grid[0], 1, order);
      double e = 0.0;
      for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(d[i] - 3.0 * std::cos(3.0 * grid[i])));
      errors[r] = e;
    }
    EXPECT_GT(errors[0] / errors[1], std::pow(2.0, order) * 0.6) << "order " << order;
  }
  std::vector<cplx> f(10);
  EXPECT_THROW(differentiate(f, 0.1, 1, 3), input_error);
  EXPECT_THROW(differentiate(f, 0.1, 3, 2), input_error);
}

TEST(Hamiltonian, RestStateHasRestEnergy) {
  PhysicsParams p;
  p.mass = 1.7;
  const auto grid = uniform_grid(0.0, p.box_length, 201);
  const double a = std::sqrt(1.0 / (2.0 * p.box_length));
  const auto psi = constant_field(grid, {a, I * a});
  const auto h = apply_hamiltonian(psi, ScalarPotential::zero(), p);
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_LT(std::abs(h[i].phi1 - p.rest_energy() * psi[i].phi1), 1e-13);
    EXPECT_LT(std::abs(h[i].phi2 - p.rest_energy() * psi[i].phi2), 1e-13);
  }
}

TEST(Hamiltonian, MasslessConstantIsAnnihilated) {
  PhysicsParams p;
  p.mass = 0.0;
  const auto grid = uniform_grid(0.0, 1.0, 21);
  const auto h = apply_hamiltonian(constant_field(grid, {1.0, 0.0}), ScalarPotential::zero(), p);
  for (const auto& v : h.values()) {
    EXPECT_EQ(v.phi1, cplx{});
    EXPECT_EQ(v.phi2, cplx{});
  }
}

TEST(Hamiltonian, PlaneWaveResidualIsSecondOrder) {
  // Eigenvector of -i sigma_x d/dx + sigma_y for momentum p: lower/upper = i E / (i p + 1).
  PhysicsParams p;
  const double k = 2.0 * std::numbers::pi / p.box_length;
  const double e = std::hypot(k, 1.0);
  const cplx ratio = I * e / cplx(1.0, k);
  double errors[2];
  for (int r = 0; r < 2; ++r) {
    const auto grid = uniform_grid(0.0, p.box_length, r == 0 ? 201 : 401);
    const auto psi = SpinorField::sample(grid, [&](double x) {
      const cplx w = std::polar(1.0, k * x);
      return Spinor{w, ratio * w};
    });
    const auto res = apply_hamiltonian(psi, ScalarPotential::zero(), p) - cplx(e) * psi;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < res.size(); ++i) worst = std::max({worst, std::abs(res[i].phi1), std::abs(res[i].phi2)});
    errors[r] = worst;
  }
  EXPECT_LT(errors[0], 1e-2);
  EXPECT_NEAR(errors[0] / errors[1], 4.0, 0.2);
}

TEST(Hamiltonian, NonUniformGridIsRejected) {
  const SpinorField psi({0.0, 0.1, 0.5}, std::vector<Spinor>(3));
  EXPECT_THROW(apply_hamiltonian(psi, ScalarPotential::zero(), PhysicsParams{}), input_error);
}

TEST(MeanValue, VelocityOfEqualComponentsIsC) {
  PhysicsParams p;
  p.c = 2.5;
  const auto grid = uniform_grid(0.0, 1.0, 201);
  auto psi = SpinorField::sample(grid, [](double x) {
    const double f = std::sin(std::numbers::pi * x) + 0.2;
    return Spinor{f, f};
  });
  psi = normalized(psi);
  EXPECT_NEAR(mean_value(Observable::velocity, psi, ScalarPotential::zero(), p).real(), 2.5, 1e-12);
}

TEST(MeanValue, RealFieldsHaveZeroEnergyAndMomentum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 2001);
  for (int k = 0; k < 20; ++k) {
    double w[6];
    for (double& v : w) v = u(rng);
    auto psi = SpinorField::sample(grid, [&](double x) {
      const double s = std::numbers::pi * x / p.box_length;
      return Spinor{w[0] * std::sin(s) + w[1] * std::sin(2 * s) + w[2] * std::sin(3 * s),
                    w[3] * std::sin(s) + w[4] * std::sin(2 * s) + w[5] * std::sin(3 * s)};
    });
    psi = normalized(psi);
    EXPECT_LT(std::abs(mean_value(Observable::energy, psi, ScalarPotential::zero(), p)), 1e-9);
    EXPECT_LT(std::abs(mean_value(Observable::momentum, psi, ScalarPotential::zero(), p)), 1e-9);
  }
}

TEST(MeanValue, UnnormalizedStateIsRejectedWithItsNorm) {
  const auto psi = constant_field(uniform_grid(0.0, 1.0, 11), {1.0, 1.0});
  try {
    mean_value(Observable::energy, psi, ScalarPotential::zero(), PhysicsParams{});
    FAIL() << "expected input_error";
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find("norm^2 = 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_observable("q"), input_error);
}

TEST(ProbabilityCurrent, Examples) {
  PhysicsParams p;
  p.c = 3.0;
  const auto grid = uniform_grid(0.0, 1.0, 5);
  const auto real = constant_field(grid, {0.5, -0.4});
  EXPECT_DOUBLE_EQ(probability_current(real, 2, p), 2.0 * 3.0 * 0.5 * -0.4);
  const auto wall = constant_field(grid, {0.5, 0.0});
  EXPECT_EQ(probability_current(wall, 0, p), 0.0);
  EXPECT_THROW(probability_current(real, 5, p), input_error);
}

TEST(Physics, ParameterValidation) {
  PhysicsParams p;
  p.hbar = 0.0;
  EXPECT_THROW(p.validate(), input_error);
  p = {};
  p.mass = -1.0;
  EXPECT_THROW(p.validate(), input_error);
  p = {};
  p.slope = 0.0;
  EXPECT_THROW(p.validate_linear(), input_error);
  EXPECT_THROW(ScalarPotential::linear(-1.0), input_error);
  p = {};
  p.slope = 2.0;
  p.mass = 3.0;
  EXPECT_DOUBLE_EQ(p.x0(), 1.5);
  EXPECT_EQ(ScalarPotential::linear(2.0)(1.25), 2.5);
}
