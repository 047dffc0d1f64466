#pragma once

#include <cstddef>
#include <cstdint>

// Tolerances and defaults shared by the library, the verification suite and
// the CLI. Everything numeric that a check compares against lives here.

namespace majorana::tolerance {

inline constexpr double root_residual = 1e-10;
inline constexpr double reality = 1e-10;
inline constexpr double orthonormality = 1e-8;
inline constexpr double normalization = 1e-8;
inline constexpr double coefficient_sum = 1e-10;
inline constexpr double mean_value = 1e-9;
inline constexpr double spectrum_relative = 1e-3;
inline constexpr double klein_gordon_rms = 1e-6;
inline constexpr double wall_current = 1e-10;
inline constexpr double rotation = 1e-12;
inline constexpr double oscillator_relative = 1e-6;
inline constexpr double linear_residual = 1e-4;
/// Relative spacing jitter accepted by the uniform-grid check.
inline constexpr double uniform_spacing = 1e-9;
/// Endpoint mismatch accepted when a grid must span a given interval.
inline constexpr double grid_span = 1e-12;
/// Largest Gaussian tail admitted at the ends of a truncated domain.
inline constexpr double gaussian_tail = 1e-12;

}  // namespace majorana::tolerance

namespace majorana::defaults {

/// Difference accuracy used by apply_hamiltonian unless told otherwise.
inline constexpr int hamiltonian_accuracy = 2;
/// Difference accuracy for mean values and Klein-Fock-Gordon residuals.
inline constexpr int observable_accuracy = 8;
inline constexpr int packet_truncation = 8;
inline constexpr std::size_t grid_points = 2001;
inline constexpr std::size_t fd_gridsize = 4000;
inline constexpr std::uint64_t seed = 20190723;

}  // namespace majorana::defaults
