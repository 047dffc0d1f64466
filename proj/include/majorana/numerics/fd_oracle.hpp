#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "majorana/boundary.hpp"
#include "majorana/errors.hpp"
#include "majorana/physics.hpp"

// Finite-difference oracle for the Dirac spectrum, independent of every
// closed-form eigenvalue in the library.
//
// The two components live on grids offset by half a cell (phi1 and phi2
// alternate along a chain of sites h/2 apart). A bond between neighbouring
// sites carries the discretized -i(hbar c d/dx +- M) coupling with the mass
// M = S + m c^2 taken at the bond centre, which keeps the matrix Hermitian and
// free of doubled low-energy modes. Walls delete the constrained component at
// the wall, the periodic box closes the chain into a ring. The resulting
// matrix is (cyclic) tridiagonal, so eigenvalues come from Sturm counts.

namespace majorana {

namespace detail {

/// Hermitian tridiagonal matrix, optionally closed by a corner entry.
struct CyclicTridiagonal {
  std::vector<double> diag;
  std::vector<std::complex<double>> upper;  // upper[i] = A(i, i+1)
  std::complex<double> corner{};            // A(0, n-1) when cyclic
  bool cyclic = false;

  std::size_t size() const { return diag.size(); }

  double gershgorin_bound() const {
    const std::size_t n = size();
    double g = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = std::abs(diag[i]);
      if (i > 0) r += std::abs(upper[i - 1]);
      if (i + 1 < n) r += std::abs(upper[i]);
      if (cyclic && (i == 0 || i + 1 == n)) r += std::abs(corner);
      g = std::max(g, r);
    }
    return g;
  }

  /// Number of eigenvalues strictly below sigma (inertia of A - sigma I via
  /// an LDL^* factorization; the ring closure only fills the last column).
  std::size_t count_below(double sigma) const {
    const std::size_t n = size();
    const double pivmin = std::max(1e-300, 1e-30 * gershgorin_bound());
    auto guard = [&](double d) { return std::abs(d) < pivmin ? -pivmin : d; };
    std::size_t negatives = 0;
    if (!cyclic) {
      double d = guard(diag[0] - sigma);
      negatives += d < 0;
      for (std::size_t i = 1; i < n; ++i) {
        d = guard(diag[i] - sigma - std::norm(upper[i - 1]) / d);
        negatives += d < 0;
      }
      return negatives;
    }
    // Ring: eliminate rows 0..n-2, tracking the fill w in column n-1 and the
    // running value s of the last diagonal entry.
    double d = guard(diag[0] - sigma);
    negatives += d < 0;
    std::complex<double> w = corner;
    double s = diag[n - 1] - sigma;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const std::complex<double> b = upper[i - 1];
      const std::complex<double> original = (i + 2 == n) ? upper[n - 2] : std::complex<double>{};
      const double d_new = guard(diag[i] - sigma - std::norm(b) / d);
      const std::complex<double> w_new = original - std::conj(b) * w / d;
      s -= std::norm(w) / d;
      d = d_new;
      w = w_new;
      negatives += d < 0;
    }
    s = guard(s - std::norm(w) / d);
    negatives += s < 0;
    return negatives;
  }

  /// Eigenvalue number `index` (0-based, ascending) by bisection on counts.
  double eigenvalue(std::size_t index) const {
    const double g = gershgorin_bound();
    double lo = -g - 1.0;
    double hi = g + 1.0;
    const double resolution = 8.0 * std::numeric_limits<double>::epsilon() * (g + 1.0);
    for (int it = 0; it < 200 && hi - lo > resolution; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) >= index + 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
};

/// A discretized Hamiltonian together with the site layout.
struct StaggeredChain {
  CyclicTridiagonal matrix;
  std::vector<double> position;
  std::vector<int> component;  // 1 or 2
  double spacing = 0.0;
};

inline StaggeredChain build_chain(double a, double h, int first_component, std::size_t sites, bool ring,
                                  const ScalarPotential& pot, const PhysicsParams& params) {
  StaggeredChain chain;
  chain.spacing = h;
  chain.matrix.cyclic = ring;
  chain.matrix.diag.assign(sites, 0.0);
  chain.matrix.upper.assign(sites - 1, {});
  for (std::size_t s = 0; s < sites; ++s) {
    chain.position.push_back(ring ? a + 0.5 * h * s : a + 0.5 * h * (s + 1));
    chain.component.push_back(((first_component - 1 + static_cast<int>(s)) % 2) + 1);
  }
  const double hc_over_h = params.hbar * params.c / h;
  auto hop = [&](std::size_t s) {
    const double bond_centre = chain.position[s] + 0.25 * h;
    const double m_bond = pot(bond_centre) + params.rest_energy();
    const double amplitude = chain.component[s] == 1 ? hc_over_h + 0.5 * m_bond : hc_over_h - 0.5 * m_bond;
    return std::complex<double>(0.0, -amplitude);
  };
  for (std::size_t s = 0; s + 1 < sites; ++s) chain.matrix.upper[s] = hop(s);
  if (ring) chain.matrix.corner = std::conj(hop(sites - 1));  // A(0, n-1) = conj(A(n-1, 0))
  return chain;
}

struct ConfiningLayout {
  int first_component;
  bool half_cell_offset;  // mixed walls put the two deleted sites on different sublattices
};

inline ConfiningLayout layout_for(ConfiningBC bc) {
  switch (bc) {
    case ConfiningBC::dirichlet_lower: return {1, false};  // phi2 deleted at both walls
    case ConfiningBC::dirichlet_upper: return {2, false};  // phi1 deleted at both walls
    case ConfiningBC::mixed_a: return {2, true};           // phi1 deleted at 0, phi2 at L
    case ConfiningBC::mixed_b: return {1, true};           // phi2 deleted at 0, phi1 at L
  }
  throw input_error("unknown confining boundary condition");
}

inline StaggeredChain walled_chain(double a, double b, ConfiningBC bc, std::size_t cells, const ScalarPotential& pot,
                                   const PhysicsParams& params) {
  const auto layout = layout_for(bc);
  if (layout.half_cell_offset) {
    const double h = (b - a) / (static_cast<double>(cells) + 0.5);
    return build_chain(a, h, layout.first_component, 2 * cells, false, pot, params);
  }
  const double h = (b - a) / static_cast<double>(cells);
  return build_chain(a, h, layout.first_component, 2 * cells - 1, false, pot, params);
}

/// Discretized Hamiltonian with `cells` cells; no lower bound on the size so
/// tests can compare against dense solvers.
inline StaggeredChain staggered_hamiltonian(const ScalarPotential& pot, const BoundaryCondition& bc,
                                            const PhysicsParams& params, std::size_t cells) {
  params.validate();
  if (cells < 2) throw input_error("fd oracle: need at least 2 cells");
  struct Visitor {
    const ScalarPotential& pot;
    const PhysicsParams& params;
    std::size_t cells;
    StaggeredChain operator()(Periodic) const {
      params.validate_box();
      return build_chain(0.0, params.box_length / static_cast<double>(cells), 1, 2 * cells, true, pot, params);
    }
    StaggeredChain operator()(ConfiningBC bc) const {
      params.validate_box();
      return walled_chain(0.0, params.box_length, bc, cells, pot, params);
    }
    StaggeredChain operator()(const BCFamily& fam) const {
      make_family(fam.kind, fam.coupling, fam.denominator);
      if (auto lim = confining_limit(fam)) return (*this)(*lim);
      if (fam.kind == BCFamily::Kind::diagonal && fam.coupling == 0.0 && fam.denominator == 1.0) {
        return (*this)(Periodic{});
      }
      throw input_error("fd oracle: only the periodic member and the confining limits of a boundary family are supported");
    }
    StaggeredChain operator()(DecayingTails) const {
      if (pot.kind() != ScalarPotential::Kind::linear) {
        throw input_error("fd oracle: decaying tails need the linear potential");
      }
      PhysicsParams p = params;
      p.slope = pot.slope();
      const double centre = -p.x0();
      const double half = linear_domain_halfwidth(p, 0);
      // phi1 vanishes at both truncation walls; phi2 walls would bind spurious
      // zero-energy edge states where |S + m c^2| is large.
      return walled_chain(centre - half, centre + half, ConfiningBC::dirichlet_upper, cells, pot, params);
    }
  };
  return std::visit(Visitor{pot, params, cells}, bc);
}

}  // namespace detail

/// Default cutoff below which an oracle eigenvalue counts as a zero mode,
/// relative to the spectral radius of the discretized Hamiltonian.
inline constexpr double fd_zero_relative = 1e-9;

/// The `count` eigenvalues of the discretized Hamiltonian closest to zero,
/// sorted by |E| (negative first on ties).
inline std::vector<double> fd_hamiltonian_spectrum(const ScalarPotential& pot, const BoundaryCondition& bc,
                                                   const PhysicsParams& params, std::size_t gridsize,
                                                   std::size_t count) {
  if (gridsize < 500) throw input_error("fd_hamiltonian_spectrum: gridsize must be >= 500");
  const auto chain = detail::staggered_hamiltonian(pot, bc, params, gridsize);
  const auto& A = chain.matrix;
  const std::size_t n = A.size();
  count = std::min(count, n);
  const std::size_t below = A.count_below(0.0);
  std::vector<double> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (below + k < n) out.push_back(A.eigenvalue(below + k));
    if (k < below) out.push_back(A.eigenvalue(below - 1 - k));
  }
  std::sort(out.begin(), out.end(), [](double x, double y) {
    return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y;
  });
  out.resize(count);
  return out;
}

/// The `count` smallest eigenvalues above the zero-mode cutoff.
inline std::vector<double> fd_positive_energies(const ScalarPotential& pot, const BoundaryCondition& bc,
                                                const PhysicsParams& params, std::size_t gridsize,
                                                std::size_t count) {
  if (gridsize < 500) throw input_error("fd_positive_energies: gridsize must be >= 500");
  const auto chain = detail::staggered_hamiltonian(pot, bc, params, gridsize);
  const auto& A = chain.matrix;
  const double cutoff = fd_zero_relative * A.gershgorin_bound();
  std::vector<double> out;
  for (std::size_t idx = A.count_below(cutoff); idx < A.size() && out.size() < count; ++idx) {
    out.push_back(A.eigenvalue(idx));
  }
  return out;
}

/// Number of oracle eigenvalues with |E| below the zero-mode cutoff.
inline std::size_t fd_zero_mode_count(const ScalarPotential& pot, const BoundaryCondition& bc,
                                      const PhysicsParams& params, std::size_t gridsize) {
  const auto chain = detail::staggered_hamiltonian(pot, bc, params, gridsize);
  const double cutoff = fd_zero_relative * chain.matrix.gershgorin_bound();
  return chain.matrix.count_below(cutoff) - chain.matrix.count_below(-cutoff);
}

}  // namespace majorana
