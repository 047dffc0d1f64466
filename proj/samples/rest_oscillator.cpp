// Prints one period of the particle at rest: the two real components rotate
// rigidly, so phi1^2 + phi2^2 stays fixed.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "majorana/rest_box.hpp"

int main() {
  using namespace majorana;
  PhysicsParams params;
  const auto grid = uniform_grid(0.0, params.box_length, 3);
  const auto packet = make_rest_packet(std::polar(1.0 / std::sqrt(2.0), 0.3), 0.0, params, grid);
  const double period = 2.0 * std::numbers::pi / params.omega();
  std::printf("%10s %12s %12s %12s\n", "t", "phi1", "phi2", "density");
  for (int k = 0; k <= 8; ++k) {
    const double t = period * k / 8.0;
    const auto v = rest_evolve(packet, t)[0];
    std::printf("%10.5f %12.8f %12.8f %12.8f\n", t, v.phi1.real(), v.phi2.real(),
                std::norm(v.phi1) + std::norm(v.phi2));
  }
}
