#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "majorana/errors.hpp"

namespace majorana {

/// Physical constants for one run. Natural units by default.
struct PhysicsParams {
  double hbar = 1.0;
  double c = 1.0;
  double mass = 1.0;
  /// Box width; used by the rest, periodic and impenetrable scenarios.
  double box_length = 2.0;
  /// Slope of the linear scalar potential; used by the linear scenario only.
  double slope = 1.0;

  double rest_energy() const { return mass * c * c; }
  /// Oscillation frequency of the particle at rest.
  double omega() const { return rest_energy() / hbar; }
  double compton_length() const { return hbar / (mass * c); }
  /// Dimensionless ratio of the Compton length to the box width.
  double lambda() const { return hbar / (mass * c * box_length); }
  /// Centre offset of the linear-potential eigenfunctions, m c^2 / k.
  double x0() const { return rest_energy() / slope; }
  double energy(double momentum) const { return std::hypot(c * momentum, rest_energy()); }

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v)) throw input_error(std::string("PhysicsParams: ") + name + " must be > 0");
    };
    positive(hbar, "hbar");
    positive(c, "c");
    if (!(mass >= 0.0) || !std::isfinite(mass)) throw input_error("PhysicsParams: mass must be >= 0");
  }

  void validate_box() const {
    validate();
    if (!(box_length > 0.0) || !std::isfinite(box_length)) throw input_error("PhysicsParams: box_length must be > 0");
  }

  void validate_massive_box() const {
    validate_box();
    if (!(mass > 0.0)) throw input_error("PhysicsParams: this scenario needs mass > 0");
  }

  void validate_linear() const {
    validate();
    if (!(slope > 0.0) || !std::isfinite(slope)) throw input_error("PhysicsParams: slope k must be > 0");
  }
};

/// Lorentz scalar potential S(x): zero or k x.
class ScalarPotential {
 public:
  enum class Kind { zero, linear };

  static ScalarPotential zero() { return ScalarPotential(Kind::zero, 0.0); }
  static ScalarPotential linear(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) throw input_error("ScalarPotential::linear: k must be > 0");
    return ScalarPotential(Kind::linear, k);
  }

  Kind kind() const { return kind_; }
  double slope() const { return slope_; }
  double operator()(double x) const { return kind_ == Kind::linear ? slope_ * x : 0.0; }
  double derivative(double /*x*/) const { return slope_; }

 private:
  ScalarPotential(Kind kind, double slope) : kind_(kind), slope_(slope) {}

  Kind kind_;
  double slope_;
};

}  // namespace majorana

namespace majorana {

/// Half-width R of the truncated whole-line domain [-x0 - R, -x0 + R] that
/// holds the linear-potential modes up to n_max:
/// R = max(10, sqrt(2 (n_max + 4))) sqrt(hbar c / k).
inline double linear_domain_halfwidth(const PhysicsParams& params, int n_max) {
  params.validate_linear();
  return std::max(10.0, std::sqrt(2.0 * (n_max + 4))) * std::sqrt(params.hbar * params.c / params.slope);
}

}  // namespace majorana
