#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majorana/config.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"
#include "majorana/numerics/hermite.hpp"
#include "majorana/physics.hpp"
#include "majorana/superposition.hpp"

// Linear scalar potential S = k x on the whole line. With
// xi = sqrt(k / hbar c) (x + x0), x0 = m c^2 / k, and h_n the normalized
// Hermite functions, the eigenstates are
//   zero mode:  (k / hbar c)^{1/4} [0, h_0(xi)]
//   +eps_N:     (k / hbar c)^{1/4} / sqrt(2) [-i h_{N-1}(xi), h_N(xi)]
//   -eps_N:     sigma_z applied to the +eps_N state
// with eps_N = sqrt(2 hbar c k N).

namespace majorana {

struct LinearSpectrumEntry {
  int N = 0;
  /// eps_N >= 0; the state at -eps_N shares the label.
  double energy = 0.0;
};

inline std::vector<LinearSpectrumEntry> linear_spectrum(const PhysicsParams& params, int n_max) {
  params.validate_linear();
  if (n_max < 1) throw input_error("linear_spectrum: N_max must be >= 1");
  std::vector<LinearSpectrumEntry> out;
  for (int N = 0; N <= n_max; ++N) out.push_back({N, std::sqrt(2.0 * params.hbar * params.c * params.slope * N)});
  return out;
}

struct Interval {
  double lo, hi;
};

/// [-x0 - R, -x0 + R], wide enough for modes up to n_max.
inline Interval linear_domain(const PhysicsParams& params, int n_max) {
  const double R = linear_domain_halfwidth(params, n_max);
  return {-params.x0() - R, -params.x0() + R};
}

inline std::vector<double> linear_grid(const PhysicsParams& params, int n_max, std::size_t points) {
  const auto d = linear_domain(params, n_max);
  return uniform_grid(d.lo, d.hi, points);
}

inline SpinorField linear_eigenstate(const LinearSpectrumEntry& entry, EnergySign sign, const PhysicsParams& params,
                                     const std::vector<double>& grid) {
  params.validate_linear();
  if (entry.N < 0) throw input_error("linear_eigenstate: N must be >= 0");
  const double inv_width = std::sqrt(params.slope / (params.hbar * params.c));
  const double scale = std::sqrt(inv_width);
  const double x0 = params.x0();
  const int N = entry.N;
  const double s = sign_value(sign);
  auto field = SpinorField::sample(grid, [&](double x) {
    const double xi = inv_width * (x + x0);
    if (N == 0) return Spinor{0.0, scale * hermite_function(0, xi)};
    const double a = scale / std::sqrt(2.0);
    return Spinor{-I * a * hermite_function(N - 1, xi), s * a * hermite_function(N, xi)};
  });
  const auto& ends = {field.values().front(), field.values().back()};
  for (const auto& v : ends) {
    const double tail = std::max(std::abs(v.phi1), std::abs(v.phi2));
    if (tail > tolerance::gaussian_tail * scale) {
      throw input_error("linear_eigenstate: grid too narrow for N = " + std::to_string(N) + " (tail " +
                        std::to_string(tail / scale) + " at the ends)");
    }
  }
  return field;
}

/// Phase u with conj(plus) ~ u * minus, measured by projection.
inline cplx conjugation_phase(const SpinorField& plus, const SpinorField& minus) {
  SpinorField cc = plus;
  for (auto& v : cc.values()) v = conj(v);
  const cplx overlap = inner_product(minus, cc);
  if (!(std::abs(overlap) > 0.0)) throw numeric_error("conjugation_phase: states are orthogonal");
  return overlap / std::abs(overlap);
}

struct LinearPacket {
  cplx c0;
  std::map<int, cplx> coeffs;
  double theta = 0.0;
  PhysicsParams params;
  Superposition modes;
};

/// Psi(x, 0) = c0 psi_0 + sum_N [c_N psi_N^+ + e^{i theta} c.c.] with
/// |c0|^2 / 2 + sum |c_N|^2 = 1/2 and c0 in e^{i theta / 2} R.
inline std::pair<LinearPacket, SpinorField> build_linear_packet(cplx c0, std::map<int, cplx> coeffs, double theta,
                                                                const PhysicsParams& params,
                                                                const std::vector<double>& grid,
                                                                bool rescale = false) {
  params.validate_linear();
  for (const auto& [N, c] : coeffs) {
    if (N < 1) throw input_error("build_linear_packet: excited labels start at 1");
  }
  if (std::abs((c0 * std::polar(1.0, -0.5 * theta)).imag()) > tolerance::reality) {
    throw input_error("build_linear_packet: c0 must be real up to the phase e^{i theta/2}");
  }
  const double factor = enforce_weight(coeffs, 0.5 * std::norm(c0), 0.5, rescale, "build_linear_packet");
  c0 *= factor;
  std::vector<ModeTerm> terms;
  for (const auto& [N, c] : coeffs) {
    const LinearSpectrumEntry entry{N, std::sqrt(2.0 * params.hbar * params.c * params.slope * N)};
    terms.push_back({c, entry.energy, linear_eigenstate(entry, EnergySign::positive, params, grid)});
  }
  std::optional<SpinorField> zero_part;
  if (c0 != cplx{}) zero_part = c0 * linear_eigenstate({0, 0.0}, EnergySign::positive, params, grid);
  LinearPacket packet{c0, std::move(coeffs), theta, params,
                      Superposition(grid, std::move(terms), std::move(zero_part), theta, params.hbar)};
  auto field = packet.modes.at(0.0);
  return {std::move(packet), std::move(field)};
}

inline SpinorField evolve_linear(const LinearPacket& packet, double t) { return packet.modes.at(t); }

}  // namespace majorana
