#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "majorana/operators.hpp"
#include "majorana/periodic_box.hpp"

using namespace majorana;

namespace {

constexpr double pi = std::numbers::pi;

double max_difference(const SpinorField& a, const SpinorField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a[i].phi1 - b[i].phi1), std::abs(a[i].phi2 - b[i].phi2)});
  }
  return worst;
}

}  // namespace

TEST(PeriodicBox, MomentumLattice) {
  PhysicsParams p;
  p.box_length = 2.0 * pi;
  p.hbar = 1.5;
  for (int n = -3; n <= 3; ++n) {
    const auto l = momentum_label(n, p);
    EXPECT_DOUBLE_EQ(l.p, 1.5 * n);
    EXPECT_EQ(l.p, -momentum_label(-n, p).p);
    EXPECT_GE(l.energy, p.rest_energy());
  }
}

TEST(PeriodicBox, ZeroMomentumReducesToRestState) {
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 21);
  const auto plane = plane_eigenstate(momentum_label(0, p), EnergySign::positive, p, grid);
  const auto rest = rest_eigenstates(p, grid).first;
  EXPECT_LT(max_difference(plane, rest), 1e-15);
}

TEST(PeriodicBox, NegativeBranchIsConjugateOfOppositeMomentum) {
  for (double mass : {0.0, 0.5, 2.0}) {
    PhysicsParams p;
    p.mass = mass;
    p.c = 1.3;
    const auto grid = uniform_grid(0.0, p.box_length, 51);
    for (int n : {1, -2, 3}) {
      const auto minus = plane_eigenstate(momentum_label(n, p), EnergySign::negative, p, grid);
      const auto mirror = charge_conjugate(plane_eigenstate(momentum_label(-n, p), EnergySign::positive, p, grid));
      EXPECT_LT(max_difference(minus, mirror), 1e-15) << mass << " " << n;
    }
  }
}

TEST(PeriodicBox, EndpointsCoincideExactly) {
  PhysicsParams p;
  p.box_length = 3.7;
  const auto grid = uniform_grid(0.0, p.box_length, 101);
  for (int n = -5; n <= 5; ++n) {
    const auto psi = plane_eigenstate(momentum_label(n, p), EnergySign::positive, p, grid);
    EXPECT_EQ(psi.values().front(), psi.values().back()) << n;
    EXPECT_EQ(probability_current(psi, 0, p), probability_current(psi, psi.size() - 1, p));
  }
}

TEST(PeriodicBox, GramMatrixIsIdentity) {
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 2001);
  std::vector<SpinorField> states;
  for (int n = -4; n <= 4; ++n) {
    for (auto s : {EnergySign::positive, EnergySign::negative}) {
      states.push_back(plane_eigenstate(momentum_label(n, p), s, p, grid));
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      EXPECT_LT(std::abs(inner_product(states[i], states[j]) - (i == j ? 1.0 : 0.0)), 1e-8);
    }
  }
}

TEST(PeriodicBox, EigenstatesSolveTheDiracEquation) {
  PhysicsParams p;
  p.mass = 0.8;
  const auto grid = uniform_grid(0.0, p.box_length, 2001);
  for (int n : {-2, 1}) {
    const auto label = momentum_label(n, p);
    for (auto s : {EnergySign::positive, EnergySign::negative}) {
      const auto psi = plane_eigenstate(label, s, p, grid);
      const auto r = apply_hamiltonian(psi, ScalarPotential::zero(), p, 8) - cplx(sign_value(s) * label.energy) * psi;
      EXPECT_LT(norm(r), 1e-9);
      EXPECT_NEAR(norm(psi), 1.0, 1e-12);
    }
  }
}

TEST(PeriodicBox, SingleModePacketIsRealStandingWave) {
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 401);
  const cplx c = 1.0 / std::sqrt(2.0);
  const auto [packet, psi] = build_periodic_packet({{1, c}}, 0.0, p, grid);
  EXPECT_LT(majorana_defect(psi, 0.0), 1e-15);
  EXPECT_NEAR(norm(psi), 1.0, 1e-12);
  const auto plus = plane_eigenstate(momentum_label(1, p), EnergySign::positive, p, grid);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    EXPECT_NEAR(psi[i].phi1.real(), 2.0 * c.real() * plus[i].phi1.real(), 1e-15);
    EXPECT_NEAR(psi[i].phi2.real(), 2.0 * c.real() * plus[i].phi2.real(), 1e-15);
  }
}

TEST(PeriodicBox, GeneralizedPhase) {
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 201);
  SeededSource rng(5);
  const auto coeffs = random_coefficients(rng, periodic_labels(3), 0.5);
  const auto [packet, psi] = build_periodic_packet(coeffs, 0.7, p, grid);
  EXPECT_LT(majorana_defect(psi, 0.7), 1e-15);
  EXPECT_GT(majorana_defect(psi, 0.0), 1e-3);
}

TEST(PeriodicBox, CoefficientConstraint) {
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 201);
  EXPECT_THROW(build_periodic_packet({{1, 0.3}}, 0.0, p, grid), input_error);
  EXPECT_THROW(build_periodic_packet({}, 0.0, p, grid, true), input_error);
  const auto [packet, psi] = build_periodic_packet({{1, 0.3}, {-2, cplx(0.0, 0.4)}}, 0.0, p, grid, true);
  EXPECT_NEAR(squared_sum(packet.coeffs), 0.5, 1e-15);
  EXPECT_NEAR(norm(psi), 1.0, 1e-12);
}

TEST(PeriodicBox, EvolutionExamples) {
  PhysicsParams p;
  const auto grid = uniform_grid(0.0, p.box_length, 201);
  SeededSource rng(9);
  const auto [packet, psi0] = build_periodic_packet(random_coefficients(rng, periodic_labels(4), 0.5), 0.0, p, grid);
  EXPECT_EQ(evolve_periodic(packet, 0.0).values(), psi0.values());
  for (double t : {0.4, 3.0, 17.5}) {
    const auto psi = evolve_periodic(packet, t);
    EXPECT_LT(majorana_defect(psi, 0.0), 1e-14);
    EXPECT_NEAR(norm(psi), 1.0, 1e-12);
  }
  // A lone zero-momentum term follows the rest-frame trajectory.
  const cplx c = std::polar(1.0 / std::sqrt(2.0), 0.6);
  const auto [rest_like, unused] = build_periodic_packet({{0, c}}, 0.0, p, grid);
  const auto rest = make_rest_packet(c, 0.0, p, grid);
  for (double t : {0.0, 1.0, 2.5}) EXPECT_LT(max_difference(evolve_periodic(rest_like, t), rest_evolve(rest, t)), 1e-14);
}

TEST(PeriodicBox, MasslessPacketIsPeriodicInTime) {
  // With m = 0 every E_n = 2 pi hbar c |n| / L, so t = L / c is a common period.
  PhysicsParams p;
  p.mass = 0.0;
  p.box_length = 3.0;
  p.c = 1.5;
  const auto grid = uniform_grid(0.0, p.box_length, 201);
  SeededSource rng(4);
  std::vector<int> labels = {-3, -1, 1, 2, 4};
  const auto [packet, psi0] = build_periodic_packet(random_coefficients(rng, labels, 0.5), 0.0, p, grid);
  EXPECT_LT(max_difference(evolve_periodic(packet, p.box_length / p.c), psi0), 1e-12);
}

TEST(PeriodicBox, ClassicalVelocity) {
  PhysicsParams p;
  EXPECT_EQ(classical_velocity_eigenvalue(momentum_label(0, p), EnergySign::positive, p), 0.0);
  EXPECT_LT(classical_velocity_eigenvalue(momentum_label(2, p), EnergySign::negative, p), 0.0);
  MomentumLabel equal{0, p.rest_energy() / p.c, p.energy(p.rest_energy() / p.c)};
  EXPECT_NEAR(classical_velocity_eigenvalue(equal, EnergySign::positive, p), p.c / std::sqrt(2.0), 1e-15);
  const auto fast = momentum_label(100000, p);
  EXPECT_LT(classical_velocity_eigenvalue(fast, EnergySign::positive, p), p.c);
  EXPECT_GT(classical_velocity_eigenvalue(fast, EnergySign::positive, p), 0.999999 * p.c);
  p.mass = 0.0;
  EXPECT_THROW(classical_velocity_eigenvalue(momentum_label(0, p), EnergySign::positive, p), input_error);
}

TEST(PeriodicBox, BoundaryMatrices) {
  EXPECT_EQ((bc_matrix(periodic_family()) - Matrix2c::Identity()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((bc_matrix(make_family(BCFamily::Kind::off_diagonal, 0.0, 1.0)) + pauli::x()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(make_family(BCFamily::Kind::diagonal, 0.5, 0.5), input_error);
  EXPECT_THROW(bc_matrix(BCFamily{BCFamily::Kind::diagonal, 0.5, 0.5}), input_error);
  const auto limit = BCFamily{BCFamily::Kind::off_diagonal, 1.0, 0.0};
  EXPECT_EQ(confining_limit(limit), ConfiningBC::dirichlet_lower);
  EXPECT_EQ(confining_limit(BCFamily{BCFamily::Kind::off_diagonal, -1.0, 0.0}), ConfiningBC::dirichlet_upper);
  try {
    bc_matrix(limit);
    FAIL();
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find("dirichlet_lower"), std::string::npos);
  }
}
