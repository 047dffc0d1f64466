#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "majorana/errors.hpp"

namespace majorana {

struct RootReport {
  double root = 0.0;
  double residual = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

/// Bisection on a sign-changing bracket. Stops once the bracket is no wider
/// than `tol` (or cannot be split further in floating point).
template <class F>
RootReport bisect(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw input_error("bisect: need lo < hi");
  if (!(tol > 0.0)) throw input_error("bisect: need tol > 0");
  double flo = f(lo);
  const double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) throw numeric_error("bisect: non-finite function value at bracket end");
  if (flo == 0.0 || fhi == 0.0) {
    const double r = flo == 0.0 ? lo : hi;
    // Keep the root strictly inside the reported bracket.
    return {r, 0.0, std::nextafter(r, -INFINITY), std::nextafter(r, INFINITY), 0};
  }
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw bracket_error("bisect: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  int it = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (!std::isfinite(fm)) throw numeric_error("bisect: non-finite function value");
    ++it;
    if (fm == 0.0) {
      lo = std::nextafter(mid, -INFINITY);
      hi = std::nextafter(mid, INFINITY);
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {root, f(root), lo, hi, it};
}

/// Quantization branches of tan z = sign * lambda * z.
enum class TanSign { plus, minus };

namespace detail {

inline constexpr double branch_margin = 1e-6;
inline constexpr int branch_probes = 1000;

// Scans [a, b] with evenly spaced probes and bisects the first sign change.
template <class F>
std::optional<RootReport> scan_and_bisect(F&& f, double a, double b) {
  double prev_x = a;
  double prev_f = f(a);
  for (int k = 1; k <= branch_probes; ++k) {
    const double x = a + (b - a) * k / branch_probes;
    const double fx = f(x);
    if ((fx < 0.0) != (prev_f < 0.0) || fx == 0.0) return bisect(f, prev_x, x, 1e-15 * std::max(1.0, x));
    prev_x = x;
    prev_f = fx;
  }
  return std::nullopt;
}

}  // namespace detail

/// First `count` strictly positive roots of tan z = +-lambda z, ascending, one
/// per tangent branch. With the plus sign and lambda > 1 the first root lies
/// in (0, pi/2); otherwise roots sit in ((j - 1/2) pi, (j + 1/2) pi), j >= 1.
inline std::vector<RootReport> tan_spectrum_roots(TanSign sign, double lambda, int count) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw input_error("tan_spectrum_roots: lambda must be > 0");
  if (count < 1) throw input_error("tan_spectrum_roots: count must be >= 1");
  const double s = sign == TanSign::plus ? 1.0 : -1.0;
  auto f = [&](double z) { return std::tan(z) - s * lambda * z; };
  constexpr double pi = std::numbers::pi;
  const double eps = detail::branch_margin;

  std::vector<RootReport> roots;
  if (sign == TanSign::plus && lambda > 1.0) {
    if (auto r = detail::scan_and_bisect(f, eps, pi / 2 - eps)) roots.push_back(*r);
  }
  for (int j = 1; static_cast<int>(roots.size()) < count; ++j) {
    auto r = detail::scan_and_bisect(f, (j - 0.5) * pi + eps, (j + 0.5) * pi - eps);
    if (!r) throw numeric_error("tan_spectrum_roots: no root found on branch " + std::to_string(j));
    roots.push_back(*r);
  }
  return roots;
}

/// Unique positive root of tanh z = lambda z, present only for lambda < 1.
inline std::optional<RootReport> tanh_root(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw input_error("tanh_root: lambda must be > 0");
  if (lambda >= 1.0) return std::nullopt;
  // Root ~ sqrt(3 (1 - lambda)) as lambda -> 1 and ~ 1/lambda as lambda -> 0.
  const double lo = 1e-8;
  const double hi = std::max(5.0, 2.0 / lambda);
  auto f = [&](double z) { return std::tanh(z) - lambda * z; };
  if (!(f(lo) > 0.0)) return std::nullopt;  // root below 1e-8: 1 - lambda is at rounding level
  return bisect(f, lo, hi, 1e-15 * hi);
}

}  // namespace majorana
