#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/boundary.hpp"
#include "majorana/config.hpp"
#include "majorana/errors.hpp"
#include "majorana/field.hpp"
#include "majorana/format.hpp"
#include "majorana/impenetrable_box.hpp"
#include "majorana/linear_potential.hpp"
#include "majorana/numerics/fd_oracle.hpp"
#include "majorana/numerics/roots.hpp"
#include "majorana/operators.hpp"
#include "majorana/periodic_box.hpp"
#include "majorana/representation.hpp"
#include "majorana/rest_box.hpp"
#include "majorana/superposition.hpp"

// Runs every invariant of the library as a list of named, deterministic
// checks. A check passes when its measured value does not exceed its
// tolerance.

namespace majorana {

enum class Scenario { rest, periodic, box, linear };

inline constexpr Scenario all_scenarios[] = {Scenario::rest, Scenario::periodic, Scenario::box, Scenario::linear};

inline std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::rest: return "rest";
    case Scenario::periodic: return "periodic";
    case Scenario::box: return "box";
    case Scenario::linear: return "linear";
  }
  return "unknown";
}

inline Scenario parse_scenario(std::string_view tag) {
  for (auto s : all_scenarios) {
    if (to_string(s) == tag) return s;
  }
  throw input_error("unknown scenario '" + std::string(tag) + "' (expected rest, periodic, box or linear)");
}

struct CheckResult {
  std::string name;
  std::string scenario;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Inputs needed to replay the worst case.
  std::string detail;
  /// Property tags this check covers.
  std::vector<std::string> covers;
};

/// Sizes of the sampled sets. The minimums keep every check meaningful.
struct SuiteBudget {
  std::size_t grid_points = defaults::grid_points;
  std::size_t fd_gridsize = defaults::fd_gridsize;
  int n_max = defaults::packet_truncation;
  int packets = 20;
  int times = 100;
  int states = 100;

  void validate() const {
    if (grid_points < 201 || grid_points % 2 == 0) throw input_error("budget: grid_points must be odd and >= 201");
    if (fd_gridsize < 500) throw input_error("budget: fd_gridsize must be >= 500");
    if (n_max < 1) throw input_error("budget: n_max must be >= 1");
    if (packets < 1 || times < 1 || states < 1) throw input_error("budget: sample counts must be >= 1");
  }
};

enum class Fault { none, wrong_dispersion };

inline Fault parse_fault(std::string_view tag) {
  if (tag.empty() || tag == "none") return Fault::none;
  if (tag == "wrong_dispersion") return Fault::wrong_dispersion;
  throw input_error("unknown fault '" + std::string(tag) + "'");
}

struct SuiteOptions {
  /// Replaces every tolerance when set.
  std::optional<double> tolerance_override;
  /// Test hook: deliberately corrupts the analytic energies fed to the
  /// spectrum comparisons.
  Fault fault = Fault::none;
};

/// Property tags every full report must cover.
inline const std::vector<std::string>& coverage_manifest() {
  static const std::vector<std::string> tags = {
      "klein_gordon_reduction", "mean_value_theorem",   "plane_wave_orthonormality", "mixed_a_quantization",
      "evanescent_quantization", "mixed_b_quantization", "linear_orthogonality"};
  return tags;
}

/// A real packet ready to be sampled in time, with its wall when confined.
struct SampledPacket {
  Superposition modes;
  std::optional<ConfiningBC> bc;
};

inline std::vector<double> scenario_grid(Scenario s, const PhysicsParams& params, const SuiteBudget& budget) {
  if (s == Scenario::linear) return linear_grid(params, budget.n_max, budget.grid_points);
  params.validate_box();
  return uniform_grid(0.0, params.box_length, budget.grid_points);
}

inline ScalarPotential scenario_potential(Scenario s, const PhysicsParams& params) {
  return s == Scenario::linear ? ScalarPotential::linear(params.slope) : ScalarPotential::zero();
}

/// Time unit for sampling: hbar over the larger of m c^2 and hbar c / L.
inline double scenario_time_scale(Scenario s, const PhysicsParams& params) {
  double e = params.rest_energy();
  if (s == Scenario::linear) {
    e = std::max(e, std::sqrt(2.0 * params.hbar * params.c * params.slope));
  } else {
    e = std::max(e, params.hbar * params.c / params.box_length);
  }
  return params.hbar / e;
}

/// Deterministic random packet of the scenario. Box packets cycle through
/// the four walls by `index`.
inline SampledPacket random_packet(Scenario s, const PhysicsParams& params, const std::vector<double>& grid,
                                   SeededSource& rng, double theta, int n_max, int index) {
  switch (s) {
    case Scenario::rest: {
      const auto packet =
          make_rest_packet(std::polar(1.0 / std::sqrt(2.0), rng.uniform(0.0, 2.0 * std::numbers::pi)), theta, params, grid);
      return {rest_superposition(packet), std::nullopt};
    }
    case Scenario::periodic: {
      auto coeffs = random_coefficients(rng, periodic_labels(n_max), 0.5);
      auto [packet, field] = build_periodic_packet(std::move(coeffs), theta, params, grid);
      return {packet.modes, std::nullopt};
    }
    case Scenario::box: {
      const ConfiningBC bc = all_confining[static_cast<std::size_t>(index) % 4];
      const bool evanescent = bc == ConfiningBC::mixed_a && has_evanescent_mode(params);
      std::vector<int> labels;
      for (int n = evanescent ? 0 : 1; n <= n_max; ++n) labels.push_back(n);
      auto coeffs = random_coefficients(rng, labels, 0.5);
      std::optional<cplx> c_q;
      if (evanescent) {
        c_q = coeffs.at(0);
        coeffs.erase(0);
      }
      auto [packet, field] = build_box_packet(bc, std::move(coeffs), c_q, theta, params, grid);
      return {packet.modes, bc};
    }
    case Scenario::linear: {
      std::vector<int> labels;
      for (int n = 1; n <= n_max; ++n) labels.push_back(n);
      const double zero_weight = rng.uniform01();
      const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
      const cplx c0 = sign * std::sqrt(zero_weight) * std::polar(1.0, 0.5 * theta);
      auto coeffs = random_coefficients(rng, labels, 0.5 * (1.0 - zero_weight));
      auto [packet, field] = build_linear_packet(c0, std::move(coeffs), theta, params, grid);
      return {packet.modes, std::nullopt};
    }
  }
  throw input_error("random_packet: unknown scenario");
}

/// `count` real normalized states of the scenario: random packets (theta = 0)
/// sampled at random times.
inline std::vector<SpinorField> sample_real_states(Scenario s, const PhysicsParams& params, std::uint64_t seed,
                                                   const SuiteBudget& budget, int count) {
  SeededSource rng(seed);
  const auto grid = scenario_grid(s, params, budget);
  const double tau = scenario_time_scale(s, params);
  std::vector<SpinorField> out;
  const int per_packet = 5;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const auto packet = random_packet(s, params, grid, rng, 0.0, budget.n_max, i);
    for (int k = 0; k < per_packet && static_cast<int>(out.size()) < count; ++k) {
      out.push_back(packet.modes.at(rng.uniform(0.0, 20.0 * tau)));
    }
  }
  return out;
}

namespace detail {

inline std::uint64_t scenario_seed(std::uint64_t seed, int salt) {
  return seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(salt + 1));
}

inline double gram_deviation(const std::vector<SpinorField>& states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const cplx g = inner_product(states[i], states[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

inline double max_difference(const SpinorField& a, const SpinorField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a[i].phi1 - b[i].phi1), std::abs(a[i].phi2 - b[i].phi2)});
  }
  return worst;
}

inline double relative_spectrum_gap(const std::vector<double>& analytic, const std::vector<double>& oracle) {
  if (analytic.size() != oracle.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    worst = std::max(worst, std::abs(analytic[i] - oracle[i]) / std::abs(oracle[i]));
  }
  return worst;
}

inline std::string list_text(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_text(v[i]);
  return s + "]";
}

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, const SuiteOptions& options) : out_(out), options_(options) {}

  void add(std::string name, Scenario s, double measured, double tolerance, std::string detail,
           std::vector<std::string> covers = {}) {
    add(std::move(name), std::string(to_string(s)), measured, tolerance, std::move(detail), std::move(covers));
  }

  void add(std::string name, std::string scenario, double measured, double tolerance, std::string detail,
           std::vector<std::string> covers = {}) {
    const double tol = options_.tolerance_override.value_or(tolerance);
    out_.push_back({std::move(name), std::move(scenario), measured, tol, measured <= tol, std::move(detail),
                    std::move(covers)});
  }

 private:
  std::vector<CheckResult>& out_;
  const SuiteOptions& options_;
};

inline double fault_factor(const SuiteOptions& options) {
  return options.fault == Fault::wrong_dispersion ? 1.05 : 1.0;
}

// Largest |<h>| and |<p>| over a set of states, with the index of the worst.
struct MeanValueWorst {
  double energy = 0.0;
  double momentum = 0.0;
  std::size_t worst_index = 0;
};

inline MeanValueWorst mean_value_worst(const std::vector<SpinorField>& states, const ScalarPotential& pot,
                                       const PhysicsParams& params) {
  MeanValueWorst w;
  double worst = -1.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double h = std::abs(mean_value(Observable::energy, states[i], pot, params));
    const double p = std::abs(mean_value(Observable::momentum, states[i], pot, params));
    w.energy = std::max(w.energy, h);
    w.momentum = std::max(w.momentum, p);
    if (std::max(h, p) > worst) {
      worst = std::max(h, p);
      w.worst_index = i;
    }
  }
  return w;
}

// Reality along trajectories: `packets` packets per theta, `times` samples each.
inline void check_trajectories(Recorder& rec, Scenario s, const PhysicsParams& params, std::uint64_t seed,
                               const SuiteBudget& budget) {
  SeededSource rng(seed);
  const auto grid = scenario_grid(s, params, budget);
  const double tau = scenario_time_scale(s, params);
  double defect = 0.0;
  double wall = 0.0;
  double periodic_gap = 0.0;
  double norm_drift = 0.0;
  std::string worst = "none";
  double worst_defect = -1.0;
  for (double theta : {0.0, 0.7}) {
    for (int i = 0; i < budget.packets; ++i) {
      const auto packet = random_packet(s, params, grid, rng, theta, budget.n_max, i);
      for (int k = 0; k < budget.times; ++k) {
        const double t = rng.uniform(0.0, 20.0 * tau);
        const auto psi = packet.modes.at(t);
        const double d = majorana_defect(psi, theta);
        defect = std::max(defect, d);
        if (d > worst_defect) {
          worst_defect = d;
          worst = "theta=" + to_text(theta) + " packet=" + std::to_string(i) + " t=" + to_text(t);
        }
        norm_drift = std::max(norm_drift, std::abs(inner_product(psi, psi).real() - 1.0));
        const double j0 = probability_current(psi, 0, params);
        const double jl = probability_current(psi, psi.size() - 1, params);
        if (packet.bc) wall = std::max({wall, std::abs(j0), std::abs(jl)});
        if (s == Scenario::periodic) periodic_gap = std::max(periodic_gap, std::abs(j0 - jl));
      }
    }
  }
  const std::string where = "seed=" + std::to_string(seed) + " worst " + worst;
  rec.add(std::string(to_string(s)) + ".reality", s, defect, tolerance::reality, where);
  rec.add(std::string(to_string(s)) + ".norm_conservation", s, norm_drift, tolerance::normalization, where);
  if (s == Scenario::box) {
    rec.add("box.wall_current", s, wall, tolerance::wall_current, "max |j| at x = 0 and x = L; seed=" + std::to_string(seed));
  }
  if (s == Scenario::periodic) {
    rec.add("periodic.current_equal_at_ends", s, periodic_gap, tolerance::wall_current,
            "max |j(0) - j(L)|; seed=" + std::to_string(seed));
  }
}

inline double klein_gordon_worst(const std::vector<std::pair<SpinorField, double>>& states, const ScalarPotential& pot,
                                 const PhysicsParams& params) {
  double worst = 0.0;
  for (const auto& [psi, energy] : states) {
    const double w = energy / params.hbar;
    const auto psi_tt = cplx(-w * w) * psi;
    worst = std::max(worst, klein_gordon_residual(psi, psi_tt, pot, params));
  }
  return worst;
}

// Real fields vanishing at both ends: random sine series in each component.
inline std::vector<SpinorField> random_real_fields(const std::vector<double>& grid, SeededSource& rng, int count) {
  const double a = grid.front();
  const double L = grid.back() - grid.front();
  std::vector<SpinorField> out;
  for (int i = 0; i < count; ++i) {
    std::array<double, 8> w{};
    for (auto& v : w) v = rng.uniform(-1.0, 1.0);
    auto psi = SpinorField::sample(grid, [&](double x) {
      double f = 0.0;
      double g = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double s = std::sin((k + 1) * std::numbers::pi * (x - a) / L);
        f += w[k] * s;
        g += w[k + 4] * s;
      }
      return Spinor{f, g};
    });
    out.push_back(normalized(psi));
  }
  return out;
}

inline void run_core(Recorder& rec, const PhysicsParams& params, std::uint64_t seed, const SuiteBudget& budget) {
  double clifford = 0.0;
  double reality = 0.0;
  for (auto variant : {Representation::standard, Representation::primed, Representation::double_primed}) {
    const auto g = make_representation(variant);
    clifford = std::max(clifford, clifford_defect(g));
    reality = std::max(reality, imaginary_part_of_i_gamma(g));
  }
  rec.add("core.clifford_relation", "core", clifford, 0.0, "all three representations");
  rec.add("core.real_dirac_operator", "core", reality, 0.0, "max |Im(i gamma^mu)| over all representations");

  SeededSource rng(seed);
  PhysicsParams unit = params;
  unit.box_length = 2.0;
  const auto grid = uniform_grid(0.0, unit.box_length, budget.grid_points);
  double symmetry = 0.0;
  double involution = 0.0;
  for (int i = 0; i < 10; ++i) {
    auto draw = [&] {
      std::vector<Spinor> v(grid.size());
      for (auto& s : v) s = {cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}, cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}};
      return SpinorField(grid, v);
    };
    const auto phi = draw();
    const auto chi = draw();
    symmetry = std::max(symmetry, std::abs(inner_product(phi, chi) - std::conj(inner_product(chi, phi))));
    involution = std::max(involution, max_difference(charge_conjugate(charge_conjugate(phi)), phi));
    involution = std::max(involution, std::abs(norm(charge_conjugate(phi)) - norm(phi)));
  }
  rec.add("core.conjugate_symmetry", "core", symmetry, 1e-12, "10 random field pairs; seed=" + std::to_string(seed));
  rec.add("core.charge_conjugation_involution", "core", involution, 1e-14, "10 random fields");

  const auto fields = random_real_fields(grid, rng, budget.states);
  const auto w = mean_value_worst(fields, ScalarPotential::zero(), unit);
  rec.add("core.mean_value_theorem", "core", std::max(w.energy, w.momentum), tolerance::mean_value,
          "random real fields vanishing at the ends; worst index " + std::to_string(w.worst_index) +
              "; seed=" + std::to_string(seed),
          {"mean_value_theorem"});
}

inline void run_rest(Recorder& rec, const PhysicsParams& params, std::uint64_t seed, const SuiteBudget& budget) {
  const auto s = Scenario::rest;
  const auto grid = scenario_grid(s, params, budget);
  auto [plus, minus] = rest_eigenstates(params, grid);
  rec.add("rest.orthonormality", s, gram_deviation({plus, minus}), tolerance::orthonormality, "Gram matrix of psi0+-");

  SeededSource rng(seed);
  const double omega = params.omega();
  const double period = omega > 0.0 ? 2.0 * std::numbers::pi / omega : 1.0;
  const auto packet =
      make_rest_packet(std::polar(1.0 / std::sqrt(2.0), rng.uniform(0.0, 2.0 * std::numbers::pi)), 0.0, params, grid);
  double rotation = 0.0;
  double oscillator = 0.0;
  const double dt = omega > 0.0 ? 1e-4 / omega : 1e-4;
  for (int k = 0; k < budget.times; ++k) {
    const double t = rng.uniform(0.0, 10.0 * period);
    rotation = std::max(rotation, max_difference(rest_evolve(packet, t), rest_evolve_rotation(packet, t)));
    const auto before = rest_evolve(packet, t - dt)[0];
    const auto now = rest_evolve(packet, t)[0];
    const auto after = rest_evolve(packet, t + dt)[0];
    const double scale = omega * omega * std::max(std::abs(now.phi1), std::abs(now.phi2)) + 1e-300;
    for (int j = 0; j < 2; ++j) {
      const cplx b = j ? before.phi2 : before.phi1;
      const cplx n = j ? now.phi2 : now.phi1;
      const cplx a = j ? after.phi2 : after.phi1;
      const cplx second = (a - 2.0 * n + b) / (dt * dt);
      oscillator = std::max(oscillator, std::abs(second + omega * omega * n) / scale);
    }
  }
  rec.add("rest.rotation_matrix_agreement", s, rotation, tolerance::rotation,
          std::to_string(budget.times) + " random times; seed=" + std::to_string(seed));
  rec.add("rest.oscillator_equation", s, oscillator, tolerance::oscillator_relative,
          "second difference in t with dt = 1e-4/omega, relative to omega^2 |phi|");

  rec.add("rest.klein_gordon_reduction", s,
          klein_gordon_worst({{plus, params.rest_energy()}, {minus, -params.rest_energy()}}, ScalarPotential::zero(), params),
          tolerance::klein_gordon_rms, "psi0+- with analytic time derivatives", {"klein_gordon_reduction"});

  check_trajectories(rec, s, params, scenario_seed(seed, 1), budget);
  const auto w = mean_value_worst(sample_real_states(s, params, scenario_seed(seed, 2), budget, budget.states),
                                  ScalarPotential::zero(), params);
  rec.add("rest.mean_value", s, std::max(w.energy, w.momentum), tolerance::mean_value,
          "max |<h>|, |<p>|; worst state " + std::to_string(w.worst_index), {"mean_value_theorem"});
}

inline void run_periodic(Recorder& rec, const PhysicsParams& params, std::uint64_t seed, const SuiteBudget& budget,
                         const SuiteOptions& options) {
  const auto s = Scenario::periodic;
  const auto grid = scenario_grid(s, params, budget);
  const auto zero = ScalarPotential::zero();

  double lattice = 0.0;
  for (int n = -budget.n_max; n <= budget.n_max; ++n) {
    const auto label = momentum_label(n, params);
    const double expected = 2.0 * std::numbers::pi * params.hbar * n / params.box_length;
    lattice = std::max(lattice, std::abs(label.p - expected) + std::abs(label.p + momentum_label(-n, params).p));
  }
  rec.add("periodic.momentum_lattice", s, lattice, 0.0, "p_n = 2 pi hbar n / L and p(-n) = -p(n)");

  std::vector<double> analytic;
  for (int n = 0; analytic.size() < 5 + 1; ++n) {
    for (int m : {n, -n}) {
      const double e = momentum_label(m, params).energy * fault_factor(options);
      if (e > 0.0) analytic.push_back(e);
      if (n == 0) break;
    }
  }
  std::sort(analytic.begin(), analytic.end());
  analytic.resize(5);
  const auto oracle = fd_positive_energies(zero, Periodic{}, params, budget.fd_gridsize, 5);
  rec.add("periodic.spectrum_oracle", s, relative_spectrum_gap(analytic, oracle), tolerance::spectrum_relative,
          "analytic " + list_text(analytic) + " oracle " + list_text(oracle) + " gridsize " +
              std::to_string(budget.fd_gridsize));

  std::vector<SpinorField> states;
  std::vector<std::pair<SpinorField, double>> kg;
  double conjugation = 0.0;
  const int n_gram = std::min(budget.n_max, 4);
  for (int n = -n_gram; n <= n_gram; ++n) {
    const auto label = momentum_label(n, params);
    for (auto sign : {EnergySign::positive, EnergySign::negative}) {
      states.push_back(plane_eigenstate(label, sign, params, grid));
      kg.push_back({states.back(), sign_value(sign) * label.energy});
    }
    conjugation = std::max(conjugation, max_difference(plane_eigenstate(label, EnergySign::negative, params, grid),
                                                       charge_conjugate(plane_eigenstate(momentum_label(-n, params),
                                                                                         EnergySign::positive, params, grid))));
  }
  rec.add("periodic.orthonormality", s, gram_deviation(states), tolerance::orthonormality,
          "both signs, |n| <= " + std::to_string(n_gram), {"plane_wave_orthonormality"});
  rec.add("periodic.conjugation_relation", s, conjugation, tolerance::reality, "psi_p^- = (psi_-p^+)^*");
  rec.add("periodic.klein_gordon_reduction", s, klein_gordon_worst(kg, zero, params), tolerance::klein_gordon_rms,
          "plane eigenstates, |n| <= " + std::to_string(n_gram), {"klein_gordon_reduction"});
  rec.add("periodic.bc_matrix_identity", s,
          (bc_matrix(periodic_family()) - Matrix2c::Identity()).cwiseAbs().maxCoeff(), 0.0,
          "diagonal family with coupling 0, denominator 1");

  check_trajectories(rec, s, params, scenario_seed(seed, 3), budget);
  const auto w = mean_value_worst(sample_real_states(s, params, scenario_seed(seed, 4), budget, budget.states), zero, params);
  rec.add("periodic.mean_value", s, std::max(w.energy, w.momentum), tolerance::mean_value,
          "max |<h>|, |<p>|; worst state " + std::to_string(w.worst_index), {"mean_value_theorem"});
}

inline void run_box(Recorder& rec, const PhysicsParams& params, std::uint64_t seed, const SuiteBudget& budget,
                    const SuiteOptions& options) {
  const auto s = Scenario::box;
  params.validate_massive_box();
  const auto grid = scenario_grid(s, params, budget);
  const auto zero = ScalarPotential::zero();

  double dirichlet = 0.0;
  for (auto bc : {ConfiningBC::dirichlet_lower, ConfiningBC::dirichlet_upper}) {
    for (const auto& e : box_spectrum(bc, params, 5)) {
      dirichlet = std::max(dirichlet, std::abs(e.value - params.hbar * std::numbers::pi * e.index / params.box_length));
    }
  }
  rec.add("box.dirichlet_quantization", s, dirichlet, 0.0, "p_N = hbar pi N / L");

  const double lambda = params.lambda();
  auto residual_of = [&](ConfiningBC bc, BoxSpectrumEntry::Kind kind) {
    double worst = 0.0;
    for (const auto& e : box_spectrum(bc, params, 6)) {
      if (e.kind == kind) worst = std::max(worst, e.residual);
    }
    return worst;
  };
  rec.add("box.mixed_a_quantization", s, residual_of(ConfiningBC::mixed_a, BoxSpectrumEntry::Kind::oscillatory),
          tolerance::root_residual, "|tan z - lambda z|, lambda = " + to_text(lambda), {"mixed_a_quantization"});
  rec.add("box.mixed_b_quantization", s, residual_of(ConfiningBC::mixed_b, BoxSpectrumEntry::Kind::oscillatory),
          tolerance::root_residual, "|tan z + lambda z|, lambda = " + to_text(lambda), {"mixed_b_quantization"});
  rec.add("box.evanescent_quantization", s, residual_of(ConfiningBC::mixed_a, BoxSpectrumEntry::Kind::evanescent),
          tolerance::root_residual, "|tanh z - lambda z|, lambda = " + to_text(lambda), {"evanescent_quantization"});

  int mismatches = 0;
  std::string sweep;
  for (double ratio : {0.5, 0.9, 1.1, 2.0, 5.0}) {
    PhysicsParams p = params;
    p.box_length = ratio * params.compton_length();
    const auto levels = box_spectrum(ConfiningBC::mixed_a, p, 1);
    const bool present = levels.front().kind == BoxSpectrumEntry::Kind::evanescent;
    mismatches += present != (ratio > 1.0);
    const bool b_present = box_spectrum(ConfiningBC::mixed_b, p, 1).front().kind == BoxSpectrumEntry::Kind::evanescent;
    mismatches += b_present;
    sweep += (sweep.empty() ? "" : " ") + to_text(ratio) + (present ? ":yes" : ":no");
  }
  rec.add("box.evanescent_existence", s, mismatches, 0.0, "L / (hbar/mc) sweep " + sweep, {"evanescent_quantization"});

  for (auto bc : all_confining) {
    std::vector<double> analytic;
    for (const auto& e : box_spectrum(bc, params, 5)) analytic.push_back(e.energy * fault_factor(options));
    std::sort(analytic.begin(), analytic.end());
    analytic.resize(5);
    const auto oracle = fd_positive_energies(zero, bc, params, budget.fd_gridsize, 5);
    rec.add("box.spectrum_oracle." + std::string(to_string(bc)), s, relative_spectrum_gap(analytic, oracle),
            tolerance::spectrum_relative, "analytic " + list_text(analytic) + " oracle " + list_text(oracle));
  }

  double conjugation = 0.0;
  std::vector<std::pair<SpinorField, double>> kg;
  for (auto bc : all_confining) {
    std::vector<SpinorField> states;
    for (const auto& e : box_spectrum(bc, params, 6)) {
      const auto plus = box_eigenstate(bc, e, EnergySign::positive, params, grid);
      const auto minus = box_eigenstate(bc, e, EnergySign::negative, params, grid);
      conjugation = std::max(conjugation, max_difference(charge_conjugate(plus), cplx(-1.0) * minus));
      states.push_back(plus);
      states.push_back(minus);
      kg.push_back({plus, e.energy});
      kg.push_back({minus, -e.energy});
    }
    rec.add("box.orthonormality." + std::string(to_string(bc)), s, gram_deviation(states), tolerance::orthonormality,
            "evanescent (if any) and first 6 oscillatory states, both signs");
  }
  rec.add("box.conjugation_relation", s, conjugation, tolerance::reality, "(psi^+)^* = -psi^-, all walls");
  rec.add("box.klein_gordon_reduction", s, klein_gordon_worst(kg, zero, params), tolerance::klein_gordon_rms,
          "eigenstates of all walls", {"klein_gordon_reduction"});

  check_trajectories(rec, s, params, scenario_seed(seed, 5), budget);
  const auto states = sample_real_states(s, params, scenario_seed(seed, 6), budget, budget.states);
  double energy = 0.0;
  double identity = 0.0;
  double momentum = 0.0;
  for (const auto& psi : states) {
    energy = std::max(energy, std::abs(mean_value(Observable::energy, psi, zero, params)));
    const cplx p = mean_value(Observable::momentum, psi, zero, params);
    const auto& a = psi.values().front();
    const auto& b = psi.values().back();
    const double jump = std::norm(b.phi1) + std::norm(b.phi2) - std::norm(a.phi1) - std::norm(a.phi2);
    identity = std::max(identity, std::abs(p - cplx(0.0, -0.5 * params.hbar * jump)));
    momentum = std::max(momentum, std::abs(p));
  }
  rec.add("box.mean_energy", s, energy, tolerance::mean_value, "max |<h>| over real box states", {"mean_value_theorem"});
  rec.add("box.momentum_boundary_term", s, identity, tolerance::mean_value,
          "<p> = -(i hbar / 2) [|Psi|^2] from 0 to L for real states; max |<p>| = " + to_text(momentum));
}

inline void run_linear(Recorder& rec, const PhysicsParams& params, std::uint64_t seed, const SuiteBudget& budget,
                       const SuiteOptions& options) {
  const auto s = Scenario::linear;
  params.validate_linear();
  const auto pot = ScalarPotential::linear(params.slope);
  const double unit = 2.0 * params.hbar * params.c * params.slope;

  const auto spectrum = linear_spectrum(params, std::max(budget.n_max, 6));
  double ladder = 0.0;
  for (std::size_t N = 1; N < spectrum.size(); ++N) {
    const double d = spectrum[N].energy * spectrum[N].energy - spectrum[N - 1].energy * spectrum[N - 1].energy;
    ladder = std::max(ladder, std::abs(d - unit) / unit);
  }
  rec.add("linear.spectrum_ladder", s, ladder, 1e-12, "eps_N^2 - eps_{N-1}^2 = 2 hbar c k");

  std::vector<double> analytic;
  for (int N = 1; N <= 5; ++N) analytic.push_back(spectrum[N].energy * fault_factor(options));
  const auto oracle = fd_positive_energies(pot, DecayingTails{}, params, budget.fd_gridsize, 5);
  rec.add("linear.spectrum_oracle", s, relative_spectrum_gap(analytic, oracle), tolerance::spectrum_relative,
          "analytic " + list_text(analytic) + " oracle " + list_text(oracle));
  const auto zero_modes = fd_zero_mode_count(pot, DecayingTails{}, params, budget.fd_gridsize);
  rec.add("linear.zero_mode_count", s, std::abs(static_cast<double>(zero_modes) - 1.0), 0.0,
          "oracle zero modes: " + std::to_string(zero_modes));

  const auto fine = linear_grid(params, 6, 4001);
  double residual = 0.0;
  for (int N = 0; N <= 6; ++N) {
    for (auto sign : {EnergySign::positive, EnergySign::negative}) {
      const auto psi = linear_eigenstate(spectrum[N], sign, params, fine);
      const double e = sign_value(sign) * spectrum[N].energy;
      const auto r = apply_hamiltonian(psi, pot, params) - cplx(e) * psi;
      residual = std::max(residual, norm(r) / (N == 0 ? std::sqrt(unit) : spectrum[N].energy));
      if (N == 0) break;
    }
  }
  rec.add("linear.hamiltonian_residual", s, residual, tolerance::linear_residual,
          "||h psi - E psi|| / eps_N, 4001 points, N <= 6");

  const auto grid = scenario_grid(s, params, budget);
  std::vector<SpinorField> states{linear_eigenstate(spectrum[0], EnergySign::positive, params, grid)};
  std::vector<std::pair<SpinorField, double>> kg{{states.front(), 0.0}};
  double sigma_z = 0.0;
  double phase_fit = 0.0;
  std::string phases;
  for (int N = 1; N <= 5; ++N) {
    const auto plus = linear_eigenstate(spectrum[N], EnergySign::positive, params, grid);
    const auto minus = linear_eigenstate(spectrum[N], EnergySign::negative, params, grid);
    auto flipped = plus;
    for (auto& v : flipped.values()) v.phi2 = -v.phi2;
    sigma_z = std::max(sigma_z, max_difference(flipped, minus));
    const cplx u = conjugation_phase(plus, minus);
    phase_fit = std::max(phase_fit, max_difference(charge_conjugate(plus), u * minus));
    phases += (phases.empty() ? "" : " ") + std::to_string(N) + ":(" + to_text(u.real()) + "," + to_text(u.imag()) + ")";
    states.push_back(plus);
    states.push_back(minus);
    kg.push_back({plus, spectrum[N].energy});
    kg.push_back({minus, -spectrum[N].energy});
  }
  rec.add("linear.orthonormality", s, gram_deviation(states), tolerance::orthonormality, "zero mode and N <= 5, both signs",
          {"linear_orthogonality"});
  rec.add("linear.sigma_z_relation", s, sigma_z, 0.0, "psi_N^- = sigma_z psi_N^+ pointwise");
  rec.add("linear.conjugation_phase", s, phase_fit, tolerance::reality, "measured phases u_N in (psi^+)^* = u psi^-: " + phases);
  rec.add("linear.klein_gordon_reduction", s, klein_gordon_worst(kg, pot, params), tolerance::klein_gordon_rms,
          "zero mode and N <= 5, slope term included", {"klein_gordon_reduction"});

  check_trajectories(rec, s, params, scenario_seed(seed, 7), budget);
  const auto w = mean_value_worst(sample_real_states(s, params, scenario_seed(seed, 8), budget, budget.states), pot, params);
  rec.add("linear.mean_value", s, std::max(w.energy, w.momentum), tolerance::mean_value,
          "max |<h>|, |<p>|; worst state " + std::to_string(w.worst_index), {"mean_value_theorem"});
}

}  // namespace detail

/// Runs the checks of the given scenarios (plus the core group whenever the
/// set is non-empty) in a fixed order.
inline std::vector<CheckResult> run_suite(const std::set<Scenario>& scenarios, const PhysicsParams& params,
                                          std::uint64_t seed, const SuiteBudget& budget = {},
                                          const SuiteOptions& options = {}) {
  budget.validate();
  params.validate();
  std::vector<CheckResult> out;
  if (scenarios.empty()) return out;
  detail::Recorder rec(out, options);
  detail::run_core(rec, params, seed, budget);
  if (scenarios.count(Scenario::rest)) detail::run_rest(rec, params, detail::scenario_seed(seed, 10), budget);
  if (scenarios.count(Scenario::periodic)) detail::run_periodic(rec, params, detail::scenario_seed(seed, 20), budget, options);
  if (scenarios.count(Scenario::box)) detail::run_box(rec, params, detail::scenario_seed(seed, 30), budget, options);
  if (scenarios.count(Scenario::linear)) detail::run_linear(rec, params, detail::scenario_seed(seed, 40), budget, options);
  return out;
}

inline std::vector<CheckResult> run_suite(const std::vector<std::string>& tags, const PhysicsParams& params,
                                          std::uint64_t seed, const SuiteBudget& budget = {},
                                          const SuiteOptions& options = {}) {
  std::set<Scenario> set;
  for (const auto& t : tags) set.insert(parse_scenario(t));
  return run_suite(set, params, seed, budget, options);
}

/// Manifest tags with no covering check in `results`.
inline std::vector<std::string> missing_coverage(const std::vector<CheckResult>& results) {
  std::vector<std::string> missing;
  for (const auto& tag : coverage_manifest()) {
    const bool found = std::any_of(results.begin(), results.end(), [&](const CheckResult& r) {
      return std::find(r.covers.begin(), r.covers.end(), tag) != r.covers.end();
    });
    if (!found) missing.push_back(tag);
  }
  return missing;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace majorana
