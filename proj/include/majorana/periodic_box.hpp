#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "majorana/boundary.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"
#include "majorana/physics.hpp"
#include "majorana/rest_box.hpp"
#include "majorana/superposition.hpp"

// Free particle on a ring of circumference L: momenta on the lattice
// p = 2 pi hbar n / L, plane-wave spinors, and real packets built from them.

namespace majorana {

struct MomentumLabel {
  int n = 0;
  double p = 0.0;
  double energy = 0.0;
};

inline MomentumLabel momentum_label(int n, const PhysicsParams& params) {
  params.validate_box();
  const double p = 2.0 * std::numbers::pi * params.hbar * n / params.box_length;
  return {n, p, params.energy(p)};
}

/// sqrt(1/2L) [1, +-i E / (i c p + m c^2)] e^{i p x / hbar}. The massless
/// zero-momentum state takes the rest-frame spinor [1, +-i].
inline SpinorField plane_eigenstate(const MomentumLabel& label, EnergySign sign, const PhysicsParams& params,
                                    const std::vector<double>& grid) {
  require_box_grid(grid, params, "plane_eigenstate");
  const double L = params.box_length;
  const double a = std::sqrt(1.0 / (2.0 * L));
  const cplx denom{params.rest_energy(), params.c * label.p};
  const cplx ratio = std::abs(denom) > 0.0 ? sign_value(sign) * I * label.energy / denom : sign_value(sign) * I;
  return SpinorField::sample(grid, [&](double x) {
    // Reduce n x / L to [0, 1) first so the phase is exactly 1 at both ends.
    const double turns = std::fmod(static_cast<double>(label.n) * (x / L), 1.0);
    const cplx wave = std::polar(a, 2.0 * std::numbers::pi * turns);
    return Spinor{wave, ratio * wave};
  });
}

/// Eigenvalues +-c^2 p / E of the classical velocity operator c^2 p h^{-1}.
inline double classical_velocity_eigenvalue(const MomentumLabel& label, EnergySign sign, const PhysicsParams& params) {
  params.validate();
  if (!(label.energy > 0.0)) {
    throw input_error("classical_velocity_eigenvalue: undefined for a massless particle at n = 0 (E = 0)");
  }
  return sign_value(sign) * params.c * params.c * label.p / label.energy;
}

struct PeriodicPacket {
  std::map<int, cplx> coeffs;
  double theta = 0.0;
  PhysicsParams params;
  Superposition modes;
};

/// Psi(x, 0) = sum_n [c_n psi_n^+ + e^{i theta} c.c.] with sum |c_n|^2 = 1/2.
inline std::pair<PeriodicPacket, SpinorField> build_periodic_packet(std::map<int, cplx> coeffs, double theta,
                                                                    const PhysicsParams& params,
                                                                    const std::vector<double>& grid,
                                                                    bool rescale = false) {
  require_box_grid(grid, params, "build_periodic_packet");
  enforce_weight(coeffs, 0.0, 0.5, rescale, "build_periodic_packet");
  std::vector<ModeTerm> terms;
  for (const auto& [n, c] : coeffs) {
    const auto label = momentum_label(n, params);
    terms.push_back({c, label.energy, plane_eigenstate(label, EnergySign::positive, params, grid)});
  }
  PeriodicPacket packet{std::move(coeffs), theta, params,
                        Superposition(grid, std::move(terms), std::nullopt, theta, params.hbar)};
  auto field = packet.modes.at(0.0);
  return {std::move(packet), std::move(field)};
}

inline SpinorField evolve_periodic(const PeriodicPacket& packet, double t) { return packet.modes.at(t); }

/// Labels -n_max..n_max.
inline std::vector<int> periodic_labels(int n_max) {
  if (n_max < 0) throw input_error("periodic_labels: n_max must be >= 0");
  std::vector<int> out;
  for (int n = -n_max; n <= n_max; ++n) out.push_back(n);
  return out;
}

}  // namespace majorana
