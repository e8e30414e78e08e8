#pragma once

#include "quartic/oscillator.hpp"

#include <vector>

namespace quartic {

// Uniform grid on [-half_width, half_width] with `points` interior nodes and
// hard-wall (Dirichlet) boundaries; spacing h = 2 half_width / (points + 1).
struct GridSpec {
  double half_width = 8.0;
  int points = 2000;

  double spacing() const { return 2.0 * half_width / (points + 1); }

  void validate() const {
    if (!(half_width > 0.0)) {
      throw std::invalid_argument("GridSpec: half_width must be > 0");
    }
    if (points < 3) {
      throw std::invalid_argument("GridSpec: need at least 3 interior points");
    }
  }
};

// Lowest `count` eigenvalues of -(1/2) d^2/dx^2 + V(x) discretised with the
// second-order central difference on the grid.  Completely independent of
// the basis-expansion route: different representation, different solver
// path, so the two can vouch for each other.
std::vector<double> fd_spectrum(const OscillatorParams& params, const GridSpec& grid,
                                int count);

// Richardson extrapolation of the h^2 error: combines the given grid with
// one of exactly half the spacing (points' = 2 points + 1) as
// (4 E_fine - E_coarse) / 3, cancelling the leading error term.
std::vector<double> richardson_pair(const OscillatorParams& params, const GridSpec& grid,
                                    int count);

// Smallest integer half-width with V(half_width) >= 3 e_max, a box generous
// enough that wavefunction leakage is negligible at energies up to e_max.
double default_half_width(const OscillatorParams& params, double e_max);

}  // namespace quartic
