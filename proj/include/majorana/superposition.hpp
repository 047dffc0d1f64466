#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "majorana/config.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"

namespace majorana {

/// Sign of the energy branch of an eigenstate.
enum class EnergySign { positive, negative };

inline double sign_value(EnergySign s) { return s == EnergySign::positive ? 1.0 : -1.0; }

/// One stationary term c psi e^{-i E t / hbar}.
struct ModeTerm {
  cplx coefficient;
  double energy;
  SpinorField field;
};

/// Real (Majorana) superposition
///   Psi(t) = static + sum_k c_k psi_k e^{-i E_k t / hbar} + e^{i theta} (same)^*
/// where `static` is an optional time-independent part that already obeys the
/// Majorana condition on its own.
class Superposition {
 public:
  Superposition(std::vector<double> grid, std::vector<ModeTerm> terms, std::optional<SpinorField> static_part,
                double theta, double hbar)
      : grid_(std::move(grid)), terms_(std::move(terms)), static_part_(std::move(static_part)), theta_(theta),
        hbar_(hbar) {
    for (const auto& t : terms_) {
      if (t.field.grid() != grid_) throw input_error("Superposition: mode field on a different grid");
    }
    if (static_part_ && static_part_->grid() != grid_) throw input_error("Superposition: static part on a different grid");
  }

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<ModeTerm>& terms() const { return terms_; }
  double theta() const { return theta_; }

  SpinorField at(double t) const { return combine(t, false); }

  /// Analytic second time derivative; the static part does not contribute.
  SpinorField second_time_derivative(double t) const { return combine(t, true); }

 private:
  SpinorField combine(double t, bool second_derivative) const {
    SpinorField half(grid_);
    for (const auto& term : terms_) {
      const double w = term.energy / hbar_;
      cplx a = term.coefficient * std::polar(1.0, -w * t);
      if (second_derivative) a *= -w * w;
      half += a * term.field;
    }
    const cplx phase = std::polar(1.0, theta_);
    SpinorField out(grid_);
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      out[i] = half[i] + phase * conj(half[i]);
      if (static_part_ && !second_derivative) out[i] += (*static_part_)[i];
    }
    return out;
  }

  std::vector<double> grid_;
  std::vector<ModeTerm> terms_;
  std::optional<SpinorField> static_part_;
  double theta_;
  double hbar_;
};

/// Deterministic random numbers from a 64-bit Mersenne twister. The mapping
/// to doubles is written out so results do not depend on the standard
/// library's distribution implementations.
class SeededSource {
 public:
  explicit SeededSource(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Coefficients for `labels` with real and imaginary parts uniform in
/// [-1, 1], rescaled so that sum |c|^2 = target.
inline std::map<int, cplx> random_coefficients(SeededSource& rng, const std::vector<int>& labels, double target) {
  if (labels.empty()) throw input_error("random_coefficients: no labels");
  std::map<int, cplx> out;
  double sum = 0.0;
  for (int label : labels) {
    const cplx c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    out[label] = c;
    sum += std::norm(c);
  }
  if (!(sum > 0.0)) throw numeric_error("random_coefficients: all draws were zero");
  const double scale = std::sqrt(target / sum);
  for (auto& [label, c] : out) c *= scale;
  return out;
}

inline double squared_sum(const std::map<int, cplx>& coeffs) {
  double s = 0.0;
  for (const auto& [label, c] : coeffs) s += std::norm(c);
  return s;
}

/// Enforces sum |c|^2 = target (optionally together with `extra` already
/// committed weight), rescaling when asked to. Returns the factor applied.
inline double enforce_weight(std::map<int, cplx>& coeffs, double extra, double target, bool rescale,
                             const char* who) {
  const double total = squared_sum(coeffs) + extra;
  if (std::abs(total - target) <= tolerance::coefficient_sum) return 1.0;
  if (!rescale || !(total > 0.0)) {
    throw input_error(std::string(who) + ": coefficient weight is " + std::to_string(total) + ", expected " +
                      std::to_string(target));
  }
  const double factor = std::sqrt(target / total);
  for (auto& [label, c] : coeffs) c *= factor;
  return factor;
}

}  // namespace majorana
