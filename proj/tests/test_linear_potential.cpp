#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "majorana/linear_potential.hpp"
#include "majorana/operators.hpp"

using namespace majorana;

namespace {

double max_difference(const SpinorField& a, const SpinorField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a[i].phi1 - b[i].phi1), std::abs(a[i].phi2 - b[i].phi2)});
  }
  return worst;
}

}  // namespace

TEST(LinearSpectrum, Examples) {
  PhysicsParams p;
  const auto s = linear_spectrum(p, 5);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0].energy, 0.0);
  EXPECT_DOUBLE_EQ(s[2].energy, 2.0);
  for (int N = 1; N <= 5; ++N) {
    EXPECT_NEAR(s[N].energy * s[N].energy - s[N - 1].energy * s[N - 1].energy, 2.0, 1e-13);
    EXPECT_GT(s[N].energy, s[N - 1].energy);
  }
  p.slope = 0.0;
  EXPECT_THROW(linear_spectrum(p, 3), input_error);
  EXPECT_THROW(linear_spectrum(PhysicsParams{}, 0), input_error);
}

TEST(LinearEigenstate, ZeroModeIsGaussianInLowerComponent) {
  PhysicsParams p;
  p.mass = 2.0;
  p.slope = 0.5;
  const auto grid = linear_grid(p, 3, 801);
  const auto psi = linear_eigenstate({0, 0.0}, EnergySign::positive, p, grid);
  const double x0 = p.x0();
  double peak_x = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(psi[i].phi1, cplx{});
    const double g = std::exp(-0.5 * 0.5 * (grid[i] + x0) * (grid[i] + x0));
    EXPECT_NEAR(psi[i].phi2.real(), std::pow(0.5, 0.25) / std::pow(std::numbers::pi, 0.25) * g, 1e-14);
    if (psi[i].phi2.real() > peak) {
      peak = psi[i].phi2.real();
      peak_x = grid[i];
    }
  }
  EXPECT_NEAR(peak_x, -x0, 1e-12);
}

TEST(LinearEigenstate, FirstLevelShape) {
  // hbar = c = k = m = 1, x0 = 1: upper proportional to -i sqrt(2) H_0,
  // lower to H_1 = 2 (x + 1), both times the same Gaussian.
  PhysicsParams p;
  const auto grid = linear_grid(p, 1, 401);
  const auto psi = linear_eigenstate({1, std::sqrt(2.0)}, EnergySign::positive, p, grid);
  const double a = psi[250].phi2.real() / (2.0 * (grid[250] + 1.0) * std::exp(-0.5 * std::pow(grid[250] + 1.0, 2)));
  for (std::size_t i = 0; i < grid.size(); i += 7) {
    const double g = std::exp(-0.5 * std::pow(grid[i] + 1.0, 2));
    EXPECT_NEAR(psi[i].phi1.real(), 0.0, 1e-15);
    EXPECT_NEAR(psi[i].phi1.imag(), -a * std::sqrt(2.0) * g, 1e-13);
    EXPECT_NEAR(psi[i].phi2.real(), a * 2.0 * (grid[i] + 1.0) * g, 1e-13);
  }
}

TEST(LinearEigenstate, EquationOrthonormalityAndSigmaZ) {
  PhysicsParams p;
  p.slope = 1.7;
  p.mass = 0.6;
  const auto pot = ScalarPotential::linear(p.slope);
  const auto grid = linear_grid(p, 6, 4001);
  const auto spectrum = linear_spectrum(p, 6);
  std::vector<SpinorField> states{linear_eigenstate(spectrum[0], EnergySign::positive, p, grid)};
  EXPECT_LT(norm(apply_hamiltonian(states[0], pot, p, 8)), 1e-9);
  for (int N = 1; N <= 6; ++N) {
    const auto plus = linear_eigenstate(spectrum[N], EnergySign::positive, p, grid);
    const auto minus = linear_eigenstate(spectrum[N], EnergySign::negative, p, grid);
    const double e = spectrum[N].energy;
    EXPECT_LT(norm(apply_hamiltonian(plus, pot, p) - cplx(e) * plus) / e, 1e-4);
    EXPECT_LT(norm(apply_hamiltonian(minus, pot, p) + cplx(e) * minus) / e, 1e-4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_EQ(minus[i].phi1, plus[i].phi1);
      EXPECT_EQ(minus[i].phi2, -plus[i].phi2);
    }
    EXPECT_EQ(conjugation_phase(plus, minus), cplx(-1.0));
    states.push_back(plus);
    states.push_back(minus);
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      EXPECT_LT(std::abs(inner_product(states[i], states[j]) - (i == j ? 1.0 : 0.0)), 1e-8);
    }
  }
}

TEST(LinearEigenstate, NarrowGridIsRejected) {
  PhysicsParams p;
  const auto grid = uniform_grid(-4.0, 2.0, 201);
  EXPECT_THROW(linear_eigenstate({3, std::sqrt(6.0)}, EnergySign::positive, p, grid), input_error);
  const auto d = linear_domain(p, 8);
  EXPECT_DOUBLE_EQ(d.lo, -11.0);
  EXPECT_DOUBLE_EQ(d.hi, 9.0);
  const auto wide = linear_domain(p, 60);
  EXPECT_DOUBLE_EQ(wide.hi - wide.lo, 2.0 * std::sqrt(128.0));
}

TEST(LinearPacket, ZeroModeOnlyIsStationary) {
  PhysicsParams p;
  const auto grid = linear_grid(p, 2, 401);
  const auto [packet, psi] = build_linear_packet(1.0, {}, 0.0, p, grid);
  EXPECT_LT(max_difference(psi, linear_eigenstate({0, 0.0}, EnergySign::positive, p, grid)), 1e-16);
  EXPECT_EQ(evolve_linear(packet, 3.7).values(), psi.values());
}

TEST(LinearPacket, SingleLevelIsRealAndPeriodic) {
  PhysicsParams p;
  const auto grid = linear_grid(p, 2, 801);
  const auto [packet, psi] = build_linear_packet(0.0, {{1, 1.0 / std::sqrt(2.0)}}, 0.0, p, grid);
  EXPECT_LT(majorana_defect(psi, 0.0), 1e-16);
  EXPECT_NEAR(norm(psi), 1.0, 1e-12);
  const double period = 2.0 * std::numbers::pi * p.hbar / std::sqrt(2.0);
  EXPECT_LT(max_difference(evolve_linear(packet, period), psi), 1e-14);
}

TEST(LinearPacket, MixedPacketStaysRealAndNormalized) {
  PhysicsParams p;
  const auto pot = ScalarPotential::linear(p.slope);
  const auto grid = linear_grid(p, 5, 2001);
  SeededSource rng(17);
  for (double theta : {0.0, 0.7}) {
    const cplx c0 = std::sqrt(0.4) * std::polar(1.0, 0.5 * theta);
    const auto coeffs = random_coefficients(rng, {1, 2, 3, 4, 5}, 0.3);
    const auto [packet, psi0] = build_linear_packet(c0, coeffs, theta, p, grid);
    for (double t : {0.0, 1.0, 9.5}) {
      const auto psi = evolve_linear(packet, t);
      EXPECT_LT(majorana_defect(psi, theta), 1e-14);
      EXPECT_NEAR(norm(psi), 1.0, 1e-12);
      EXPECT_LT(std::abs(mean_value(Observable::energy, psi, pot, p)), 1e-9);
      EXPECT_LT(std::abs(mean_value(Observable::momentum, psi, pot, p)), 1e-9);
      const auto tt = packet.modes.second_time_derivative(t);
      EXPECT_LT(klein_gordon_residual(psi, tt, pot, p), 1e-6);
    }
  }
}

TEST(LinearPacket, Errors) {
  PhysicsParams p;
  const auto grid = linear_grid(p, 2, 201);
  EXPECT_THROW(build_linear_packet(0.0, {}, 0.0, p, grid), input_error);
  EXPECT_THROW(build_linear_packet(cplx(0.0, 1.0), {}, 0.0, p, grid), input_error);
  EXPECT_THROW(build_linear_packet(0.5, {{1, 0.5}}, 0.0, p, grid), input_error);
  EXPECT_THROW(build_linear_packet(0.0, {{0, 0.5}}, 0.0, p, grid), input_error);
  const auto [packet, psi] = build_linear_packet(0.5, {{1, 0.5}}, 0.0, p, grid, true);
  EXPECT_NEAR(0.5 * std::norm(packet.c0) + squared_sum(packet.coeffs), 0.5, 1e-15);
}
