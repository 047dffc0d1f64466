#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "majorana/errors.hpp"
#include "majorana/representation.hpp"

namespace majorana {

/// The four wall conditions compatible with a real (Majorana) wave function.
enum class ConfiningBC {
  dirichlet_lower,  ///< phi2(0) = phi2(L) = 0
  dirichlet_upper,  ///< phi1(0) = phi1(L) = 0
  mixed_a,          ///< phi1(0) = phi2(L) = 0; admits an evanescent mode when L > hbar/(m c)
  mixed_b,          ///< phi2(0) = phi1(L) = 0; the one-dimensional bag-model wall
};

inline constexpr ConfiningBC all_confining[] = {ConfiningBC::dirichlet_lower, ConfiningBC::dirichlet_upper,
                                               ConfiningBC::mixed_a, ConfiningBC::mixed_b};

inline std::string_view to_string(ConfiningBC bc) {
  switch (bc) {
    case ConfiningBC::dirichlet_lower: return "dirichlet_lower";
    case ConfiningBC::dirichlet_upper: return "dirichlet_upper";
    case ConfiningBC::mixed_a: return "mixed_a";
    case ConfiningBC::mixed_b: return "mixed_b";
  }
  return "unknown";
}

inline ConfiningBC parse_confining(std::string_view tag) {
  for (auto bc : all_confining) {
    if (to_string(bc) == tag) return bc;
  }
  throw input_error("unknown confining boundary condition '" + std::string(tag) + "'");
}

/// One-parameter families of non-confining conditions psi(L) = B psi(0):
///   off_diagonal:  B = -(i a sigma_y + sigma_x) / b
///   diagonal:      B = (a sigma_z + 1) / b
/// with a^2 + b^2 = 1. b -> 0 is a confining limit.
struct BCFamily {
  enum class Kind { off_diagonal, diagonal };
  Kind kind = Kind::diagonal;
  double coupling = 0.0;
  double denominator = 1.0;
};

inline BCFamily make_family(BCFamily::Kind kind, double coupling, double denominator) {
  if (!std::isfinite(coupling) || !std::isfinite(denominator) ||
      std::abs(coupling * coupling + denominator * denominator - 1.0) > 1e-12) {
    throw input_error("BCFamily: parameters must satisfy coupling^2 + denominator^2 = 1");
  }
  return {kind, coupling, denominator};
}

inline BCFamily periodic_family() { return make_family(BCFamily::Kind::diagonal, 0.0, 1.0); }

/// The confining wall a family degenerates to as its denominator vanishes.
inline std::optional<ConfiningBC> confining_limit(const BCFamily& fam) {
  if (fam.denominator != 0.0) return std::nullopt;
  if (fam.kind == BCFamily::Kind::off_diagonal) {
    return fam.coupling > 0 ? ConfiningBC::dirichlet_lower : ConfiningBC::dirichlet_upper;
  }
  return fam.coupling > 0 ? ConfiningBC::mixed_a : ConfiningBC::mixed_b;
}

/// Matrix mapping psi(0) to psi(L).
inline Matrix2c bc_matrix(const BCFamily& fam) {
  make_family(fam.kind, fam.coupling, fam.denominator);
  if (auto lim = confining_limit(fam)) {
    throw input_error("bc_matrix: denominator is zero; the family degenerates to the confining wall " +
                      std::string(to_string(*lim)));
  }
  const std::complex<double> i{0.0, 1.0};
  if (fam.kind == BCFamily::Kind::off_diagonal) {
    return -(i * fam.coupling * pauli::y() + pauli::x()) / fam.denominator;
  }
  return (fam.coupling * pauli::z() + pauli::identity()) / fam.denominator;
}

struct Periodic {};
/// Whole-line problem on a truncated domain; the wave function has decayed
/// at both ends.
struct DecayingTails {};

using BoundaryCondition = std::variant<Periodic, BCFamily, ConfiningBC, DecayingTails>;

}  // namespace majorana
