#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majorana/errors.hpp"
#include "majorana/format.hpp"
#include "majorana/impenetrable_box.hpp"
#include "majorana/linear_potential.hpp"
#include "majorana/periodic_box.hpp"
#include "majorana/rest_box.hpp"
#include "majorana/verify.hpp"

// Command-line front end: JSON run configuration in, CSV or JSON out.

namespace majorana::cli {

using json = nlohmann::json;

enum ExitCode : int { ok = 0, config_failure = 2, check_failure = 3, numeric_failure = 4 };

struct CoefficientSpec {
  int label = 0;
  cplx value;
};

struct RunConfig {
  std::string scenario = "rest";
  PhysicsParams params;
  std::string bc = "dirichlet_lower";
  int n_max = defaults::packet_truncation;
  int count = 5;
  std::vector<CoefficientSpec> coefficients;
  std::optional<cplx> c0;
  std::optional<cplx> c_q;
  std::uint64_t seed = defaults::seed;
  std::size_t grid_points = defaults::grid_points;
  std::vector<double> times;
  int time_samples = 0;
  std::optional<double> t_end;
  double theta = 0.0;
  std::string out;
  bool rescale = false;
  std::vector<std::string> scenarios = {"rest", "periodic", "box", "linear"};
  std::size_t fd_gridsize = defaults::fd_gridsize;
  std::string inject_fault = "none";
  std::optional<double> tolerance_override;
  int packets = 20;
  int states = 100;
  int trajectory_times = 100;
};

namespace detail {

inline cplx parse_complex(const json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k != "re" && k != "im") throw input_error("config: unknown key '" + k + "' in " + key);
    }
    return {j.value("re", 0.0), j.value("im", 0.0)};
  }
  throw input_error("config: " + key + " must be a number or {re, im}");
}

template <class T>
T get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw input_error("config: key '" + key + "' has the wrong type");
  }
}

}  // namespace detail

/// Reads a RunConfig from JSON. Unknown keys are rejected.
inline RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw input_error("config: top level must be a JSON object");
  RunConfig cfg;
  for (const auto& [key, v] : j.items()) {
    using detail::get;
    if (key == "scenario") cfg.scenario = get<std::string>(v, key);
    else if (key == "hbar") cfg.params.hbar = get<double>(v, key);
    else if (key == "c") cfg.params.c = get<double>(v, key);
    else if (key == "mass") cfg.params.mass = get<double>(v, key);
    else if (key == "box_length") cfg.params.box_length = get<double>(v, key);
    else if (key == "slope") cfg.params.slope = get<double>(v, key);
    else if (key == "bc") cfg.bc = get<std::string>(v, key);
    else if (key == "n_max") cfg.n_max = get<int>(v, key);
    else if (key == "count") cfg.count = get<int>(v, key);
    else if (key == "coefficients") {
      if (!v.is_array()) throw input_error("config: coefficients must be an array");
      for (const auto& item : v) {
        if (!item.is_object() || !item.contains("label")) throw input_error("config: each coefficient needs a label");
        for (const auto& [k, unused] : item.items()) {
          if (k != "label" && k != "re" && k != "im") throw input_error("config: unknown key '" + k + "' in coefficients");
        }
        cfg.coefficients.push_back({get<int>(item["label"], "label"), {item.value("re", 0.0), item.value("im", 0.0)}});
      }
    } else if (key == "c0") cfg.c0 = detail::parse_complex(v, key);
    else if (key == "c_q") cfg.c_q = detail::parse_complex(v, key);
    else if (key == "seed") cfg.seed = get<std::uint64_t>(v, key);
    else if (key == "grid_points") cfg.grid_points = get<std::size_t>(v, key);
    else if (key == "times") cfg.times = get<std::vector<double>>(v, key);
    else if (key == "time_samples") cfg.time_samples = get<int>(v, key);
    else if (key == "t_end") cfg.t_end = get<double>(v, key);
    else if (key == "theta") cfg.theta = get<double>(v, key);
    else if (key == "out") cfg.out = get<std::string>(v, key);
    else if (key == "rescale") cfg.rescale = get<bool>(v, key);
    else if (key == "scenarios") cfg.scenarios = get<std::vector<std::string>>(v, key);
    else if (key == "fd_gridsize") cfg.fd_gridsize = get<std::size_t>(v, key);
    else if (key == "inject_fault") cfg.inject_fault = get<std::string>(v, key);
    else if (key == "tolerance_override") cfg.tolerance_override = get<double>(v, key);
    else if (key == "packets") cfg.packets = get<int>(v, key);
    else if (key == "states") cfg.states = get<int>(v, key);
    else if (key == "trajectory_times") cfg.trajectory_times = get<int>(v, key);
    else throw input_error("config: unknown key '" + key + "'");
  }
  cfg.params.validate();
  if (!std::isfinite(cfg.theta)) throw input_error("config: theta must be finite");
  if (cfg.time_samples < 0) throw input_error("config: time_samples must be >= 0");
  if (cfg.count < 1) throw input_error("config: count must be >= 1");
  for (double t : cfg.times) {
    if (!std::isfinite(t)) throw input_error("config: times must be finite");
  }
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("config: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

inline void csv_row(std::ostream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

/// kind,label_value,energy_plus,energy_minus,residual
inline void cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  const auto& p = cfg.params;
  const auto scenario = parse_scenario(cfg.scenario);
  os << "kind,label_value,energy_plus,energy_minus,residual\n";
  switch (scenario) {
    case Scenario::rest:
      p.validate_box();
      csv_row(os, {"rest", to_text(0.0), to_text(p.rest_energy()), to_text(-p.rest_energy()), to_text(0.0)});
      break;
    case Scenario::periodic:
      if (cfg.n_max < 0) throw input_error("spectrum: n_max must be >= 0");
      for (int n = -cfg.n_max; n <= cfg.n_max; ++n) {
        const auto label = momentum_label(n, p);
        csv_row(os, {"momentum", to_text(label.p), to_text(label.energy), to_text(-label.energy), to_text(0.0)});
      }
      break;
    case Scenario::box:
      for (const auto& e : box_spectrum(parse_confining(cfg.bc), p, cfg.count)) {
        csv_row(os, {std::string(to_string(e.kind)), to_text(e.value), to_text(e.energy), to_text(-e.energy),
                     to_text(e.residual)});
      }
      break;
    case Scenario::linear:
      for (const auto& e : linear_spectrum(p, cfg.n_max)) {
        csv_row(os, {e.N == 0 ? "zero_mode" : "level", std::to_string(e.N), to_text(e.energy), to_text(-e.energy),
                     to_text(0.0)});
      }
      break;
  }
}

inline std::map<int, cplx> coefficient_map(const RunConfig& cfg) {
  std::map<int, cplx> out;
  for (const auto& c : cfg.coefficients) {
    if (!out.emplace(c.label, c.value).second) throw input_error("config: duplicate coefficient label " + std::to_string(c.label));
  }
  return out;
}

/// Sample times: explicit list, else time_samples points on [0, t_end]
/// (t_end defaults to one rest-frame period), else t = 0.
inline std::vector<double> sample_times(const RunConfig& cfg) {
  if (!cfg.times.empty()) return cfg.times;
  if (cfg.time_samples == 0) return {0.0};
  const double omega = cfg.params.omega();
  const double t_end = cfg.t_end.value_or(omega > 0.0 ? 2.0 * std::numbers::pi / omega : 1.0);
  if (cfg.time_samples == 1) return {0.0};
  std::vector<double> out;
  for (int k = 0; k < cfg.time_samples; ++k) out.push_back(t_end * k / (cfg.time_samples - 1));
  return out;
}

/// The packet described by the config: explicit coefficients when given,
/// otherwise a seeded random one.
inline Superposition config_packet(const RunConfig& cfg) {
  const auto& p = cfg.params;
  const auto scenario = parse_scenario(cfg.scenario);
  SeededSource rng(cfg.seed);
  auto coeffs = coefficient_map(cfg);
  const bool explicit_packet = !coeffs.empty() || cfg.c0 || cfg.c_q;
  switch (scenario) {
    case Scenario::rest: {
      const auto grid = uniform_grid(0.0, (p.validate_box(), p.box_length), cfg.grid_points);
      cplx c_plus{1.0 / std::sqrt(2.0), 0.0};
      if (!coeffs.empty()) {
        if (coeffs.size() != 1 || !coeffs.count(0)) throw input_error("rest: the only coefficient label is 0");
        c_plus = coeffs.at(0);
        if (cfg.rescale && std::abs(c_plus) > 0.0) c_plus /= std::abs(c_plus) * std::sqrt(2.0);
      }
      return rest_superposition(make_rest_packet(c_plus, cfg.theta, p, grid));
    }
    case Scenario::periodic: {
      const auto grid = uniform_grid(0.0, (p.validate_box(), p.box_length), cfg.grid_points);
      if (!explicit_packet) coeffs = random_coefficients(rng, periodic_labels(cfg.n_max), 0.5);
      return build_periodic_packet(std::move(coeffs), cfg.theta, p, grid, cfg.rescale).first.modes;
    }
    case Scenario::box: {
      const auto bc = parse_confining(cfg.bc);
      const auto grid = uniform_grid(0.0, (p.validate_box(), p.box_length), cfg.grid_points);
      std::optional<cplx> c_q = cfg.c_q;
      if (!explicit_packet) {
        const bool evanescent = bc == ConfiningBC::mixed_a && has_evanescent_mode(p);
        std::vector<int> labels;
        for (int n = evanescent ? 0 : 1; n <= cfg.n_max; ++n) labels.push_back(n);
        coeffs = random_coefficients(rng, labels, 0.5);
        if (evanescent) {
          c_q = coeffs.at(0);
          coeffs.erase(0);
        }
      }
      return build_box_packet(bc, std::move(coeffs), c_q, cfg.theta, p, grid, cfg.rescale).first.modes;
    }
    case Scenario::linear: {
      const auto grid = linear_grid(p, std::max(cfg.n_max, coeffs.empty() ? 0 : coeffs.rbegin()->first), cfg.grid_points);
      cplx c0 = cfg.c0.value_or(cplx{});
      if (!explicit_packet) {
        std::vector<int> labels;
        for (int n = 1; n <= cfg.n_max; ++n) labels.push_back(n);
        const double zero_weight = rng.uniform01();
        c0 = std::sqrt(zero_weight) * std::polar(1.0, 0.5 * cfg.theta);
        coeffs = random_coefficients(rng, labels, 0.5 * (1.0 - zero_weight));
      }
      return build_linear_packet(c0, std::move(coeffs), cfg.theta, p, grid, cfg.rescale).first.modes;
    }
  }
  throw input_error("unknown scenario");
}

/// t,x,re_phi1,im_phi1,re_phi2,im_phi2,density
inline void cmd_evolve(const RunConfig& cfg, std::ostream& os) {
  const auto packet = config_packet(cfg);
  const auto times = sample_times(cfg);
  os << "t,x,re_phi1,im_phi1,re_phi2,im_phi2,density\n";
  for (double t : times) {
    const auto psi = packet.at(t);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const auto& v = psi[i];
      csv_row(os, {to_text(t), to_text(psi.grid()[i]), to_text(v.phi1.real()), to_text(v.phi1.imag()),
                   to_text(v.phi2.real()), to_text(v.phi2.imag()), to_text(std::norm(v.phi1) + std::norm(v.phi2))});
    }
  }
}

inline json report_json(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    checks.push_back({{"name", r.name},
                      {"scenario", r.scenario},
                      {"measured", r.measured},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"covers", r.covers}});
  }
  json coverage = json::object();
  for (const auto& tag : coverage_manifest()) {
    json names = json::array();
    for (const auto& r : results) {
      if (std::find(r.covers.begin(), r.covers.end(), tag) != r.covers.end()) names.push_back(r.name);
    }
    coverage[tag] = names;
  }
  const auto& p = cfg.params;
  return {{"schema_version", 1},
          {"seed", cfg.seed},
          {"params", {{"hbar", p.hbar}, {"c", p.c}, {"mass", p.mass}, {"box_length", p.box_length}, {"slope", p.slope}}},
          {"budget",
           {{"grid_points", cfg.grid_points},
            {"fd_gridsize", cfg.fd_gridsize},
            {"n_max", cfg.n_max},
            {"packets", cfg.packets},
            {"trajectory_times", cfg.trajectory_times},
            {"states", cfg.states}}},
          {"scenarios", cfg.scenarios},
          {"inject_fault", cfg.inject_fault},
          {"checks", checks},
          {"coverage", coverage},
          {"missing_coverage", missing_coverage(results)},
          {"summary", {{"total", results.size()}, {"failed", failed}, {"all_passed", failed == 0}}}};
}

/// Writes the JSON report; returns the names of the failed checks.
inline std::vector<std::string> cmd_verify(const RunConfig& cfg, std::ostream& os) {
  SuiteBudget budget;
  budget.grid_points = cfg.grid_points;
  budget.fd_gridsize = cfg.fd_gridsize;
  budget.n_max = cfg.n_max;
  budget.packets = cfg.packets;
  budget.times = cfg.trajectory_times;
  budget.states = cfg.states;
  SuiteOptions options;
  options.fault = parse_fault(cfg.inject_fault);
  options.tolerance_override = cfg.tolerance_override;
  const auto results = run_suite(cfg.scenarios, cfg.params, cfg.seed, budget, options);
  os << report_json(cfg, results).dump(2) << '\n';
  std::vector<std::string> failed;
  for (const auto& r : results) {
    if (!r.passed) failed.push_back(r.name);
  }
  return failed;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& err = std::cerr) {
  CLI::App app{"Real solutions of the 1+1 dimensional Dirac equation: spectra, evolution, verification"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> theta;
  for (const char* name : {"spectrum", "evolve", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "output file (overrides the config's out)");
    sub->add_option("--seed", seed, "random seed override");
    sub->add_option("--theta", theta, "Majorana phase override in radians");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    return code == 0 ? ExitCode::ok : ExitCode::config_failure;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    RunConfig cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (theta) cfg.theta = *theta;
    if (!out_path.empty()) cfg.out = out_path;
    if (cfg.out.empty()) throw input_error("no output path: pass --out or set \"out\" in the config");
    std::ostringstream buffer;
    std::vector<std::string> failed;
    if (command == "spectrum") cmd_spectrum(cfg, buffer);
    else if (command == "evolve") cmd_evolve(cfg, buffer);
    else failed = cmd_verify(cfg, buffer);
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) throw input_error("cannot write '" + cfg.out + "'");
    if (!failed.empty()) {
      err << "verify: " << failed.size() << " check(s) failed:";
      for (const auto& name : failed) err << ' ' << name;
      err << "\nsee " << cfg.out << '\n';
      return ExitCode::check_failure;
    }
    return ExitCode::ok;
  } catch (const input_error& e) {
    err << command << ": " << e.what() << '\n';
    return ExitCode::config_failure;
  } catch (const std::exception& e) {
    err << command << ": " << e.what() << '\n';
    return ExitCode::numeric_failure;
  }
}

}  // namespace majorana::cli
