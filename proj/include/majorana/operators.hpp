#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/config.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"
#include "majorana/physics.hpp"

// Operators of the (1+1)-dimensional Dirac equation in the standard Majorana
// representation, alpha = sigma_x and beta = sigma_y:
//
//   h = -i hbar c sigma_x d/dx + (S(x) + m c^2) sigma_y
//
// so that (h psi)_1 = -i (hbar c phi2' + M phi2) and
//         (h psi)_2 = -i (hbar c phi1' - M phi1),  M = S + m c^2.

namespace majorana {

/// Charge conjugation; the conjugation matrix is the identity here.
inline SpinorField charge_conjugate(const SpinorField& psi) {
  SpinorField out = psi;
  for (auto& v : out.values()) v = conj(v);
  return out;
}

/// max over the grid and both components of |psi - e^{i theta} psi^*|.
inline double majorana_defect(const SpinorField& psi, double theta = 0.0) {
  const cplx phase = std::polar(1.0, theta);
  double worst = 0.0;
  for (const auto& v : psi.values()) {
    worst = std::max(worst, std::abs(v.phi1 - phase * std::conj(v.phi1)));
    worst = std::max(worst, std::abs(v.phi2 - phase * std::conj(v.phi2)));
  }
  return worst;
}

inline SpinorField apply_hamiltonian(const SpinorField& psi, const ScalarPotential& pot, const PhysicsParams& params,
                                     int accuracy = defaults::hamiltonian_accuracy) {
  if (!psi.is_uniform()) throw input_error("apply_hamiltonian: grid must be uniform");
  const double h = psi.spacing();
  const auto phi1 = psi.component(1);
  const auto phi2 = psi.component(2);
  const auto d1 = differentiate(phi1, h, 1, accuracy);
  const auto d2 = differentiate(phi2, h, 1, accuracy);
  const double hc = params.hbar * params.c;
  SpinorField out(psi.grid());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double mass_term = pot(psi.grid()[i]) + params.rest_energy();
    out[i].phi1 = -I * (hc * d2[i] + mass_term * phi2[i]);
    out[i].phi2 = -I * (hc * d1[i] - mass_term * phi1[i]);
  }
  return out;
}

/// -i hbar d/dx applied to both components.
inline SpinorField apply_momentum(const SpinorField& psi, const PhysicsParams& params, int accuracy) {
  if (!psi.is_uniform()) throw input_error("apply_momentum: grid must be uniform");
  const double h = psi.spacing();
  const auto d1 = differentiate(psi.component(1), h, 1, accuracy);
  const auto d2 = differentiate(psi.component(2), h, 1, accuracy);
  SpinorField out(psi.grid());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = {-I * params.hbar * d1[i], -I * params.hbar * d2[i]};
  return out;
}

/// Dirac velocity c alpha = c sigma_x.
inline SpinorField apply_velocity(const SpinorField& psi, const PhysicsParams& params) {
  SpinorField out(psi.grid());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = {params.c * psi[i].phi2, params.c * psi[i].phi1};
  return out;
}

enum class Observable { energy, momentum, velocity };

inline Observable parse_observable(std::string_view tag) {
  if (tag == "h") return Observable::energy;
  if (tag == "p") return Observable::momentum;
  if (tag == "v") return Observable::velocity;
  throw input_error("unknown observable tag '" + std::string(tag) + "'");
}

/// <psi, O psi> for a normalized state. The differential operators use
/// `accuracy`-order stencils; high order keeps the truncation error well below
/// the mean-value tolerance on desk-scale grids.
inline cplx mean_value(Observable observable, const SpinorField& psi, const ScalarPotential& pot,
                       const PhysicsParams& params, int accuracy = defaults::observable_accuracy) {
  const double n2 = inner_product(psi, psi).real();
  if (std::abs(n2 - 1.0) > tolerance::normalization) {
    throw input_error("mean_value: state is not normalized (norm^2 = " + std::to_string(n2) + ")");
  }
  switch (observable) {
    case Observable::energy: return inner_product(psi, apply_hamiltonian(psi, pot, params, accuracy));
    case Observable::momentum: return inner_product(psi, apply_momentum(psi, params, accuracy));
    case Observable::velocity: return inner_product(psi, apply_velocity(psi, params));
  }
  throw input_error("mean_value: unknown observable");
}

/// j = c psi^dagger sigma_x psi at one grid point.
inline double probability_current(const SpinorField& psi, std::size_t index, const PhysicsParams& params) {
  if (index >= psi.size()) {
    throw input_error("probability_current: index " + std::to_string(index) + " outside grid of " +
                      std::to_string(psi.size()));
  }
  const auto& v = psi[index];
  return params.c * 2.0 * (std::conj(v.phi1) * v.phi2).real();
}

/// RMS over grid points and components of the second-order equation each
/// component obeys,
///   [ c^-2 d_t^2 - d_x^2 + (-1)^{j-1} S'/(hbar c) + (S + m c^2)^2/(hbar c)^2 ] phi_j,
/// given the field and its second time derivative on the same grid.
inline double klein_gordon_residual(const SpinorField& psi, const SpinorField& psi_tt, const ScalarPotential& pot,
                                    const PhysicsParams& params, int accuracy = defaults::observable_accuracy) {
  if (!psi.same_grid(psi_tt)) throw input_error("klein_gordon_residual: grids differ");
  const double h = psi.spacing();
  const double hc = params.hbar * params.c;
  double acc = 0.0;
  for (int j = 1; j <= 2; ++j) {
    const auto phi = psi.component(j);
    const auto phi_tt = psi_tt.component(j);
    const auto phi_xx = differentiate(phi, h, 2, accuracy);
    const double sign = j == 1 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double x = psi.grid()[i];
      const double m_eff = (pot(x) + params.rest_energy()) / hc;
      const cplx r = phi_tt[i] / (params.c * params.c) - phi_xx[i] + sign * pot.derivative(x) / hc * phi[i] +
                     m_eff * m_eff * phi[i];
      acc += std::norm(r);
    }
  }
  return std::sqrt(acc / static_cast<double>(2 * psi.size()));
}

}  // namespace majorana
