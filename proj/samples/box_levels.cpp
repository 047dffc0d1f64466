// Lowest positive levels of the four confining walls as the box shrinks
// through the Compton length, next to the finite-difference estimate.

#include <cstdio>
#include <string>

#include "majorana/impenetrable_box.hpp"
#include "majorana/numerics/fd_oracle.hpp"

int main() {
  using namespace majorana;
  for (double length : {0.5, 2.0, 5.0}) {
    PhysicsParams params;
    params.box_length = length;
    std::printf("L = %.2f (lambda = %.3f)\n", length, params.lambda());
    for (auto bc : all_confining) {
      const auto levels = box_spectrum(bc, params, 3);
      const auto oracle = fd_positive_energies(ScalarPotential::zero(), bc, params, 1000, 3);
      std::printf("  %-16s", std::string(to_string(bc)).c_str());
      for (std::size_t i = 0; i < 3; ++i) {
        const char* tag = levels[i].kind == BoxSpectrumEntry::Kind::evanescent ? "q" : "p";
        std::printf("  %s:%9.5f (fd %9.5f)", tag, levels[i].energy, oracle[i]);
      }
      std::printf("\n");
    }
  }
}
