#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "majorana/config.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"
#include "majorana/physics.hpp"
#include "majorana/superposition.hpp"

// Particle at rest in a box: two constant eigenstates of energy +-m c^2 and
// the real superposition that rotates rigidly in the (phi1, phi2) plane.

namespace majorana {

inline void require_box_grid(const std::vector<double>& grid, const PhysicsParams& params, const char* who) {
  params.validate_box();
  if (!spans(grid, 0.0, params.box_length)) throw input_error(std::string(who) + ": grid must span [0, L]");
}

/// sqrt(1/2L) [1, i] and sqrt(1/2L) [1, -i].
inline std::pair<SpinorField, SpinorField> rest_eigenstates(const PhysicsParams& params,
                                                            const std::vector<double>& grid) {
  require_box_grid(grid, params, "rest_eigenstates");
  const double a = std::sqrt(1.0 / (2.0 * params.box_length));
  return {SpinorField::sample(grid, [&](double) { return Spinor{a, I * a}; }),
          SpinorField::sample(grid, [&](double) { return Spinor{a, -I * a}; })};
}

struct RestPacket {
  cplx c_plus;
  double theta = 0.0;
  PhysicsParams params;
  std::vector<double> grid;
};

inline RestPacket make_rest_packet(cplx c_plus, double theta, const PhysicsParams& params, std::vector<double> grid) {
  require_box_grid(grid, params, "make_rest_packet");
  if (std::abs(std::abs(c_plus) - 1.0 / std::sqrt(2.0)) > tolerance::coefficient_sum) {
    throw input_error("make_rest_packet: |c_plus| must be 1/sqrt(2)");
  }
  return {c_plus, theta, params, std::move(grid)};
}

inline Superposition rest_superposition(const RestPacket& packet) {
  auto [plus, minus] = rest_eigenstates(packet.params, packet.grid);
  return Superposition(packet.grid, {{packet.c_plus, packet.params.rest_energy(), plus}}, std::nullopt, packet.theta,
                       packet.params.hbar);
}

/// c psi+ e^{-i omega t} + e^{i theta} (c psi+ e^{-i omega t})^*.
inline SpinorField rest_evolve(const RestPacket& packet, double t) {
  const double a = std::sqrt(1.0 / (2.0 * packet.params.box_length));
  const cplx amp = packet.c_plus * std::polar(a, -packet.params.omega() * t);
  const cplx phase = std::polar(1.0, packet.theta);
  const Spinor half{amp, I * amp};
  const Spinor value = half + phase * conj(half);
  return SpinorField::sample(packet.grid, [&](double) { return value; });
}

/// Applies [[cos wt, -sin wt], [sin wt, cos wt]] pointwise.
inline SpinorField rotate_components(const SpinorField& psi, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  SpinorField out = psi;
  for (auto& v : out.values()) v = {c * v.phi1 - s * v.phi2, s * v.phi1 + c * v.phi2};
  return out;
}

/// Evolution of the rest packet by rotating its initial field.
inline SpinorField rest_evolve_rotation(const RestPacket& packet, double t) {
  return rotate_components(rest_evolve(packet, 0.0), packet.params.omega() * t);
}

}  // namespace majorana
