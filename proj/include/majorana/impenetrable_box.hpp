#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majorana/boundary.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"
#include "majorana/numerics/roots.hpp"
#include "majorana/physics.hpp"
#include "majorana/rest_box.hpp"
#include "majorana/superposition.hpp"

// Box with one of the four confining walls. With z = p L / hbar and
// lambda = hbar / (m c L) the allowed momenta are
//   dirichlet_lower, dirichlet_upper:  z = pi N
//   mixed_a:  tan z = lambda z, plus tanh z = lambda z (evanescent) if lambda < 1
//   mixed_b:  tan z = -lambda z

namespace majorana {

struct BoxSpectrumEntry {
  enum class Kind { oscillatory, evanescent };
  ConfiningBC bc = ConfiningBC::dirichlet_lower;
  Kind kind = Kind::oscillatory;
  /// 1-based branch number for oscillatory entries, 0 for the evanescent one.
  int index = 0;
  /// p for oscillatory entries, q for the evanescent one.
  double value = 0.0;
  /// Dimensionless root value * L / hbar.
  double z = 0.0;
  /// Positive energy; the negative branch is its mirror image.
  double energy = 0.0;
  /// |quantization condition| at the root; exactly 0 for the Dirichlet walls.
  double residual = 0.0;
};

inline std::string_view to_string(BoxSpectrumEntry::Kind k) {
  return k == BoxSpectrumEntry::Kind::oscillatory ? "oscillatory" : "evanescent";
}

/// First `count` oscillatory levels, preceded by the evanescent level when the
/// mixed_a wall admits one. A zero-momentum solution is never listed.
inline std::vector<BoxSpectrumEntry> box_spectrum(ConfiningBC bc, const PhysicsParams& params, int count) {
  if (count < 1) throw input_error("box_spectrum: count must be >= 1");
  params.validate_box();
  const double L = params.box_length;
  const double scale = params.hbar / L;  // p = scale * z
  std::vector<BoxSpectrumEntry> out;
  auto oscillatory = [&](int index, double z, double residual) {
    const double p = scale * z;
    out.push_back({bc, BoxSpectrumEntry::Kind::oscillatory, index, p, z, params.energy(p), residual});
  };

  if (bc == ConfiningBC::dirichlet_lower || bc == ConfiningBC::dirichlet_upper) {
    for (int N = 1; N <= count; ++N) oscillatory(N, std::numbers::pi * N, 0.0);
    return out;
  }

  params.validate_massive_box();
  const double lambda = params.lambda();
  const double s = bc == ConfiningBC::mixed_a ? 1.0 : -1.0;
  if (bc == ConfiningBC::mixed_a) {
    if (auto r = tanh_root(lambda)) {
      const double q = scale * r->root;
      const double cq = params.c * q;
      const double e = std::sqrt((params.rest_energy() - cq) * (params.rest_energy() + cq));
      out.push_back({bc, BoxSpectrumEntry::Kind::evanescent, 0, q, r->root, e,
                     std::abs(std::tanh(r->root) - lambda * r->root)});
    }
  }
  const auto roots = tan_spectrum_roots(s > 0 ? TanSign::plus : TanSign::minus, lambda, count);
  int index = 1;
  for (const auto& r : roots) oscillatory(index++, r.root, std::abs(std::tan(r.root) - s * lambda * r.root));
  return out;
}

inline bool has_evanescent_mode(const PhysicsParams& params) {
  params.validate_massive_box();
  return tanh_root(params.lambda()).has_value();
}

namespace detail {

// y - sin y and sinh y - y without cancellation for small y.
inline double y_minus_sin(double y) {
  if (std::abs(y) < 0.1) {
    const double y2 = y * y;
    return y * y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0 * (1.0 - y2 / 72.0)));
  }
  return y - std::sin(y);
}

inline double sinh_minus_y(double y) {
  if (std::abs(y) < 0.1) {
    const double y2 = y * y;
    return y * y2 / 6.0 * (1.0 + y2 / 20.0 * (1.0 + y2 / 42.0 * (1.0 + y2 / 72.0)));
  }
  return std::sinh(y) - y;
}

// Integrals over [0, L] of s^2, c^2 and s c, where (s, c) are (sin, cos) or
// (sinh, cosh) of k x and z = k L.
struct Quadratures {
  double ss, cc, sc;
};

inline Quadratures trig_quadratures(double L, double z) {
  const double k = z / L;
  const double ss = y_minus_sin(2.0 * z) / (4.0 * k);
  const double s = std::sin(z);
  return {ss, L - ss, s * s / (2.0 * k)};
}

inline Quadratures hyperbolic_quadratures(double L, double z) {
  const double k = z / L;
  const double ss = sinh_minus_y(2.0 * z) / (4.0 * k);
  const double s = std::sinh(z);
  return {ss, L + ss, s * s / (2.0 * k)};
}

}  // namespace detail

/// Closed-form eigenfunction of a confining box, evaluated pointwise.
/// With M = m c^2, P = c p (or c q) and E the positive energy,
///   dirichlet_lower, mixed_b:  [+-(P cos + M sin) / E, i sin]
///   dirichlet_upper, mixed_a:  [i sin, +-(P cos - M sin) / E]
///   evanescent (mixed_a):      +-[sinh, -+i (P cosh - M sinh) / E]
/// all of k x with k = p / hbar, scaled to unit norm.
class BoxMode {
 public:
  BoxMode(ConfiningBC bc, const BoxSpectrumEntry& entry, EnergySign sign, const PhysicsParams& params)
      : bc_(bc), entry_(entry), sign_(sign_value(sign)), params_(params) {
    if (entry.bc != bc) {
      throw input_error("box eigenstate: entry belongs to " + std::string(to_string(entry.bc)) + ", not " +
                        std::string(to_string(bc)));
    }
    if (entry.kind == BoxSpectrumEntry::Kind::evanescent && bc != ConfiningBC::mixed_a) {
      throw input_error("box eigenstate: only mixed_a has an evanescent mode");
    }
    const double L = params.box_length;
    const double P = params.c * entry.value;
    const double M = params.rest_energy();
    const double E = entry.energy;
    if (!(E > 0.0) || !(entry.z > 0.0)) throw input_error("box eigenstate: entry must have z > 0 and E > 0");
    const bool lower_first = bc == ConfiningBC::dirichlet_lower || bc == ConfiningBC::mixed_b;
    double n2;
    if (entry.kind == BoxSpectrumEntry::Kind::evanescent) {
      const auto q = detail::hyperbolic_quadratures(L, entry.z);
      n2 = q.ss + (P * P * q.cc - 2.0 * P * M * q.sc + M * M * q.ss) / (E * E);
    } else {
      const auto q = detail::trig_quadratures(L, entry.z);
      const double cross = lower_first ? 2.0 * P * M * q.sc : -2.0 * P * M * q.sc;
      n2 = q.ss + (P * P * q.cc + cross + M * M * q.ss) / (E * E);
    }
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw numeric_error("box eigenstate: degenerate normalization integral");
    amplitude_ = 1.0 / std::sqrt(n2);
  }

  /// Factor that brings the unnormalized shape to unit norm.
  double amplitude() const { return amplitude_; }

  Spinor operator()(double x) const {
    const double k = entry_.value / params_.hbar;
    const double P = params_.c * entry_.value;
    const double M = params_.rest_energy();
    const double E = entry_.energy;
    const double a = amplitude_;
    if (entry_.kind == BoxSpectrumEntry::Kind::evanescent) {
      const double sh = std::sinh(k * x);
      const double ch = std::cosh(k * x);
      const double lower = (P * ch - M * sh) / E;
      return {sign_ * a * sh, -I * a * lower};
    }
    const double sn = std::sin(k * x);
    const double cs = std::cos(k * x);
    switch (bc_) {
      case ConfiningBC::dirichlet_lower:
      case ConfiningBC::mixed_b: return {sign_ * a * (P * cs + M * sn) / E, I * a * sn};
      case ConfiningBC::dirichlet_upper:
      case ConfiningBC::mixed_a: return {I * a * sn, sign_ * a * (P * cs - M * sn) / E};
    }
    throw input_error("box eigenstate: unknown wall");
  }

 private:
  ConfiningBC bc_;
  BoxSpectrumEntry entry_;
  double sign_;
  PhysicsParams params_;
  double amplitude_ = 1.0;
};

inline SpinorField box_eigenstate(ConfiningBC bc, const BoxSpectrumEntry& entry, EnergySign sign,
                                  const PhysicsParams& params, const std::vector<double>& grid) {
  require_box_grid(grid, params, "box_eigenstate");
  const BoxMode mode(bc, entry, sign, params);
  auto field = SpinorField::sample(grid, mode);
  // The wall points carry analytic zeros; remove rounding noise of sin(k L).
  auto& first = field.values().front();
  auto& last = field.values().back();
  first.phi1 = bc == ConfiningBC::dirichlet_upper || bc == ConfiningBC::mixed_a ? cplx{} : first.phi1;
  first.phi2 = bc == ConfiningBC::dirichlet_lower || bc == ConfiningBC::mixed_b ? cplx{} : first.phi2;
  last.phi1 = bc == ConfiningBC::dirichlet_upper || bc == ConfiningBC::mixed_b ? cplx{} : last.phi1;
  last.phi2 = bc == ConfiningBC::dirichlet_lower || bc == ConfiningBC::mixed_a ? cplx{} : last.phi2;
  return field;
}

struct BoxPacket {
  ConfiningBC bc = ConfiningBC::dirichlet_lower;
  /// Keyed by oscillatory branch number (1-based).
  std::map<int, cplx> coeffs;
  std::optional<cplx> c_q;
  double theta = 0.0;
  PhysicsParams params;
  Superposition modes;
};

/// Psi(x, 0) = [c_q psi_q^+ + c.c.] + sum_N [c_N psi_N^+ + c.c.] with
/// |c_q|^2 + sum |c_N|^2 = 1/2.
inline std::pair<BoxPacket, SpinorField> build_box_packet(ConfiningBC bc, std::map<int, cplx> coeffs,
                                                          std::optional<cplx> c_q, double theta,
                                                          const PhysicsParams& params,
                                                          const std::vector<double>& grid, bool rescale = false) {
  require_box_grid(grid, params, "build_box_packet");
  if (coeffs.empty() && !c_q) throw input_error("build_box_packet: no coefficients given");
  int highest = 1;
  for (const auto& [N, c] : coeffs) {
    if (N < 1) throw input_error("build_box_packet: oscillatory labels start at 1");
    highest = std::max(highest, N);
  }
  const auto spectrum = box_spectrum(bc, params, highest);
  const bool evanescent = !spectrum.empty() && spectrum.front().kind == BoxSpectrumEntry::Kind::evanescent;
  if (c_q && !evanescent) {
    throw input_error("build_box_packet: c_q given but " + std::string(to_string(bc)) +
                      " has no evanescent mode for these parameters");
  }
  double cq_weight = c_q ? std::norm(*c_q) : 0.0;
  const double factor = enforce_weight(coeffs, cq_weight, 0.5, rescale, "build_box_packet");
  if (c_q) *c_q *= factor;

  std::vector<ModeTerm> terms;
  const std::size_t offset = evanescent ? 1 : 0;
  if (c_q) {
    terms.push_back({*c_q, spectrum.front().energy, box_eigenstate(bc, spectrum.front(), EnergySign::positive, params, grid)});
  }
  for (const auto& [N, c] : coeffs) {
    const auto& entry = spectrum[offset + static_cast<std::size_t>(N) - 1];
    terms.push_back({c, entry.energy, box_eigenstate(bc, entry, EnergySign::positive, params, grid)});
  }
  BoxPacket packet{bc, std::move(coeffs), c_q, theta, params,
                   Superposition(grid, std::move(terms), std::nullopt, theta, params.hbar)};
  auto field = packet.modes.at(0.0);
  return {std::move(packet), std::move(field)};
}

inline SpinorField evolve_box(const BoxPacket& packet, double t) { return packet.modes.at(t); }

}  // namespace majorana
