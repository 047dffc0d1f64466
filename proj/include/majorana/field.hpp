#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majorana/config.hpp"
#include "majorana/errors.hpp"

namespace majorana {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Two-component Dirac spinor value at one point, [phi1 phi2]^T.
struct Spinor {
  cplx phi1{};
  cplx phi2{};

  friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.phi1 + b.phi1, a.phi2 + b.phi2}; }
  friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.phi1 - b.phi1, a.phi2 - b.phi2}; }
  friend Spinor operator*(cplx s, const Spinor& a) { return {s * a.phi1, s * a.phi2}; }
  friend Spinor operator*(const Spinor& a, cplx s) { return s * a; }
  Spinor& operator+=(const Spinor& o) {
    phi1 += o.phi1;
    phi2 += o.phi2;
    return *this;
  }
  friend bool operator==(const Spinor&, const Spinor&) = default;
};

inline Spinor conj(const Spinor& s) { return {std::conj(s.phi1), std::conj(s.phi2)}; }

/// Uniform grid on [a, b] with an odd number of points (composite Simpson
/// needs an even number of intervals).
inline std::vector<double> uniform_grid(double a, double b, std::size_t points) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw input_error("uniform_grid: need finite a < b");
  }
  if (points < 3 || points % 2 == 0) {
    throw input_error("uniform_grid: point count must be odd and >= 3, got " + std::to_string(points));
  }
  std::vector<double> x(points);
  const double h = (b - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) x[i] = a + h * static_cast<double>(i);
  x.back() = b;
  return x;
}

/// A spinor-valued function sampled on a strictly increasing grid.
class SpinorField {
 public:
  SpinorField(std::vector<double> grid, std::vector<Spinor> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size()) {
      throw input_error("SpinorField: grid has " + std::to_string(grid_.size()) + " points but " +
                        std::to_string(values_.size()) + " values");
    }
    if (grid_.size() < 3) throw input_error("SpinorField: need at least 3 grid points");
    for (std::size_t i = 1; i < grid_.size(); ++i) {
      if (!(grid_[i] > grid_[i - 1])) throw input_error("SpinorField: grid must be strictly increasing");
    }
  }

  /// Zero field on `grid`.
  explicit SpinorField(std::vector<double> grid)
      : SpinorField(grid, std::vector<Spinor>(grid.size())) {}

  template <class Fn>
  static SpinorField sample(const std::vector<double>& grid, Fn&& fn) {
    std::vector<Spinor> v;
    v.reserve(grid.size());
    for (double x : grid) v.push_back(fn(x));
    return SpinorField(grid, std::move(v));
  }

  std::size_t size() const { return grid_.size(); }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<Spinor>& values() const { return values_; }
  std::vector<Spinor>& values() { return values_; }
  const Spinor& operator[](std::size_t i) const { return values_[i]; }
  Spinor& operator[](std::size_t i) { return values_[i]; }

  std::vector<cplx> component(int which) const {
    std::vector<cplx> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = which == 1 ? values_[i].phi1 : values_[i].phi2;
    return out;
  }

  bool is_uniform() const {
    const double h = spacing_estimate();
    for (std::size_t i = 1; i < grid_.size(); ++i) {
      if (std::abs((grid_[i] - grid_[i - 1]) - h) > tolerance::uniform_spacing * std::abs(h)) return false;
    }
    return true;
  }

  /// Spacing of a uniform grid; throws if the grid is not uniform.
  double spacing() const {
    if (!is_uniform()) throw input_error("SpinorField: grid is not uniform");
    return spacing_estimate();
  }

  bool same_grid(const SpinorField& o) const { return grid_ == o.grid_; }

  SpinorField& operator+=(const SpinorField& o) {
    if (!same_grid(o)) throw input_error("SpinorField: grids differ");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  friend SpinorField operator+(SpinorField a, const SpinorField& b) { return a += b; }
  friend SpinorField operator-(SpinorField a, const SpinorField& b) { return a += cplx(-1.0) * b; }
  friend SpinorField operator*(cplx s, SpinorField a) {
    for (auto& v : a.values_) v = s * v;
    return a;
  }

 private:
  double spacing_estimate() const {
    return (grid_.back() - grid_.front()) / static_cast<double>(grid_.size() - 1);
  }

  std::vector<double> grid_;
  std::vector<Spinor> values_;
};

inline bool spans(const std::vector<double>& grid, double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(grid.front() - a) <= tolerance::grid_span * scale &&
         std::abs(grid.back() - b) <= tolerance::grid_span * scale;
}

/// Composite Simpson weights for a uniform grid with an odd point count.
inline std::vector<double> simpson_weights(std::size_t points, double h) {
  if (points < 3 || points % 2 == 0) {
    throw input_error("simpson_weights: composite Simpson needs an odd point count >= 3, got " +
                      std::to_string(points));
  }
  std::vector<double> w(points);
  for (std::size_t i = 0; i < points; ++i) w[i] = (i == 0 || i + 1 == points) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  for (auto& v : w) v *= h / 3.0;
  return w;
}

/// Composite Simpson integral of samples on a uniform grid.
template <class T>
T simpson(std::span<const T> f, double h) {
  const auto w = simpson_weights(f.size(), h);
  T acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += w[i] * f[i];
  return acc;
}

/// <phi, chi> = integral of phi^dagger chi (composite Simpson).
inline cplx inner_product(const SpinorField& phi, const SpinorField& chi) {
  if (!phi.same_grid(chi)) throw input_error("inner_product: fields live on different grids");
  const auto w = simpson_weights(phi.size(), phi.spacing());
  cplx acc{};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    acc += w[i] * (std::conj(phi[i].phi1) * chi[i].phi1 + std::conj(phi[i].phi2) * chi[i].phi2);
  }
  return acc;
}

inline double norm(const SpinorField& psi) { return std::sqrt(std::max(0.0, inner_product(psi, psi).real())); }

inline SpinorField normalized(const SpinorField& psi) {
  const double n = norm(psi);
  if (!(n > 0.0) || !std::isfinite(n)) throw numeric_error("normalized: field has zero or non-finite norm");
  return cplx(1.0 / n) * psi;
}

namespace detail {

// Fornberg's recursion: weights of the `deriv`-th derivative at offset 0 for
// the stencil nodes `offsets` (in units of h).
inline std::vector<double> fornberg(const std::vector<double>& offsets, int deriv) {
  const int n = static_cast<int>(offsets.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(deriv + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, deriv);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][deriv];
  return w;
}

}  // namespace detail

/// Finite-difference derivative of order `deriv` (1 or 2) on a uniform grid.
/// Interior points use centred stencils of the requested accuracy; points too
/// close to an end use shifted (one-sided) stencils of the same accuracy.
/// deriv = 1, accuracy = 2 is the classic central / (-3, 4, -1) scheme.
inline std::vector<cplx> differentiate(std::span<const cplx> f, double h, int deriv = 1, int accuracy = 2) {
  if (deriv != 1 && deriv != 2) throw input_error("differentiate: only first and second derivatives");
  if (accuracy < 2 || accuracy > 8 || accuracy % 2 != 0) {
    throw input_error("differentiate: accuracy must be 2, 4, 6 or 8");
  }
  const int n = static_cast<int>(f.size());
  const int centred = 2 * ((deriv + accuracy - 1) / 2) + 1;
  const int one_sided = deriv + accuracy;
  if (n < one_sided) throw input_error("differentiate: grid too small for the requested stencil");
  const int half = centred / 2;

  const double scale = deriv == 1 ? 1.0 / h : 1.0 / (h * h);
  std::vector<cplx> out(n);

  std::vector<double> central_offsets;
  for (int k = -half; k <= half; ++k) central_offsets.push_back(k);
  const auto central = detail::fornberg(central_offsets, deriv);

  for (int i = 0; i < n; ++i) {
    if (i >= half && i + half < n) {
      cplx acc{};
      for (int k = 0; k < centred; ++k) acc += central[k] * f[i - half + k];
      out[i] = acc * scale;
      continue;
    }
    const int start = i < half ? 0 : n - one_sided;
    std::vector<double> offsets;
    for (int k = 0; k < one_sided; ++k) offsets.push_back(start + k - i);
    const auto w = detail::fornberg(offsets, deriv);
    cplx acc{};
    for (int k = 0; k < one_sided; ++k) acc += w[k] * f[start + k];
    out[i] = acc * scale;
  }
  return out;
}

}  // namespace majorana
