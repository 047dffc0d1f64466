#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>

#include "majorana/errors.hpp"

namespace majorana {

using Matrix2c = Eigen::Matrix2cd;

namespace pauli {

inline Matrix2c identity() { return Matrix2c::Identity(); }

inline Matrix2c x() {
  Matrix2c m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Matrix2c y() {
  using C = std::complex<double>;
  Matrix2c m;
  m << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
  return m;
}

inline Matrix2c z() {
  Matrix2c m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

/// Choice of Majorana-representation gamma matrices. All three make i*gamma^mu
/// real; they differ by the similarity transforms sigma_y (.) sigma_y and
/// sigma_x (.) sigma_x applied to the standard pair.
enum class Representation { standard, primed, double_primed };

inline std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::standard: return "standard";
    case Representation::primed: return "primed";
    case Representation::double_primed: return "double_primed";
  }
  return "unknown";
}

inline Representation parse_representation(std::string_view tag) {
  if (tag == "standard") return Representation::standard;
  if (tag == "primed") return Representation::primed;
  if (tag == "double_primed") return Representation::double_primed;
  throw input_error("unknown representation tag '" + std::string(tag) + "'");
}

struct GammaPair {
  Matrix2c gamma0;
  Matrix2c gamma1;
  Representation variant = Representation::standard;

  /// Dirac alpha = gamma0 gamma1 (real in every Majorana representation).
  Matrix2c alpha() const { return gamma0 * gamma1; }
  /// Dirac beta = gamma0 (purely imaginary in every Majorana representation).
  Matrix2c beta() const { return gamma0; }
  const Matrix2c& operator[](int mu) const { return mu == 0 ? gamma0 : gamma1; }
};

inline GammaPair make_representation(Representation variant) {
  const std::complex<double> i{0.0, 1.0};
  GammaPair standard{pauli::y(), -i * pauli::z(), Representation::standard};
  switch (variant) {
    case Representation::standard:
      return standard;
    case Representation::primed:
      return {pauli::y() * standard.gamma0 * pauli::y(), pauli::y() * standard.gamma1 * pauli::y(), variant};
    case Representation::double_primed:
      return {pauli::x() * standard.gamma0 * pauli::x(), pauli::x() * standard.gamma1 * pauli::x(), variant};
  }
  throw input_error("make_representation: unknown variant");
}

inline GammaPair make_representation(std::string_view tag) { return make_representation(parse_representation(tag)); }

/// max entry of |gamma^mu gamma^nu + gamma^nu gamma^mu - 2 g^{mu nu} 1| with g = diag(1, -1).
inline double clifford_defect(const GammaPair& g) {
  double worst = 0.0;
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      const double metric = mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0);
      const Matrix2c r = g[mu] * g[nu] + g[nu] * g[mu] - 2.0 * metric * Matrix2c::Identity();
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

/// Largest |Im| over the entries of i*gamma^mu; zero for a Majorana representation.
inline double imaginary_part_of_i_gamma(const GammaPair& g) {
  const std::complex<double> i{0.0, 1.0};
  return std::max((i * g.gamma0).imag().cwiseAbs().maxCoeff(), (i * g.gamma1).imag().cwiseAbs().maxCoeff());
}

}  // namespace majorana
