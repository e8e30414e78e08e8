#pragma once

#include <vector>

namespace quartic {

struct WkbLevel {
  int n = 0;
  double energy = 0.0;
};

// Constants of the closed-form semiclassical solution for the pure quartic
// potential V(x) = lambda x^4 / 4:
//
//   E_n = coefficient * (n + 1/2)^(4/3) * lambda^(1/3)
//   coefficient = 3^(4/3) pi^2 / (2^(2/3) Gamma(1/4)^(8/3))
//
// elliptic_k_minus_1 is K(-1), the complete elliptic integral of the first
// kind at parameter m = -1.  It enters through the period of the quartic
// oscillator: the same coefficient can be written (3 pi / (8 K(-1)))^(4/3),
// so the two constants are kept side by side and cross-checked in the tests.
struct WkbConstants {
  double coefficient;
  double elliptic_k_minus_1;
};

const WkbConstants& wkb_constants();

// Closed-form semiclassical level for V = lambda x^4 / 4.
double wkb_energy(int n, double lambda);

// sqrt(2) times the integral of sqrt(E - lambda x^4 / 4) over a full
// classical period at energy E, by Gauss-Legendre quadrature after the
// substitution x = x_t sin(theta) that absorbs the turning-point
// singularity.  At E = wkb_energy(n, lambda) this equals (n + 1/2) 2 pi.
double wkb_action(double energy, double lambda);

// Levels n = 0 ... count-1.
std::vector<WkbLevel> wkb_table(int count, double lambda);

}  // namespace quartic
