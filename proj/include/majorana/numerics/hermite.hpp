#pragma once

#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"

namespace majorana {

/// Physicists' Hermite polynomial H_n(x): H_{n+1} = 2x H_n - 2n H_{n-1}.
inline double hermite(int n, double x) {
  if (n < 0) throw input_error("hermite: order must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Normalized Hermite function H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)),
/// by the stable three-term recurrence.
inline double hermite_function(int n, double x) {
  if (n < 0) throw input_error("hermite_function: order must be >= 0");
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace majorana
