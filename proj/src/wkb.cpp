#include "quartic/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace quartic {

namespace {

constexpr double kGammaQuarter = 3.6256099082219083;     // Gamma(1/4)
constexpr double kEllipticKMinus1 = 1.3110287771460599;  // K(-1)
constexpr int kQuadratureOrder = 200;

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes and weights on [-1, 1]: Newton iteration on the
// three-term Legendre recurrence, seeded with the Chebyshev estimate.
Quadrature gauss_legendre(int order) {
  Quadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  const int mid = (order + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      deriv = order * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / deriv;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    q.nodes[i] = -z;
    q.nodes[order - 1 - i] = z;
    q.weights[i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
    q.weights[order - 1 - i] = q.weights[i];
  }
  return q;
}

const Quadrature& quadrature() {
  static const Quadrature q = gauss_legendre(kQuadratureOrder);
  return q;
}

}  // namespace

const WkbConstants& wkb_constants() {
  static const WkbConstants c = {
      std::pow(3.0, 4.0 / 3.0) * std::numbers::pi * std::numbers::pi /
          (std::pow(2.0, 2.0 / 3.0) * std::pow(kGammaQuarter, 8.0 / 3.0)),
      kEllipticKMinus1,
  };
  return c;
}

double wkb_energy(int n, double lambda) {
  if (n < 0) {
    throw std::invalid_argument("wkb_energy: level index must be >= 0");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("wkb_energy: lambda must be > 0");
  }
  // Grouped so the lambda dependence is a single trailing factor; the cube
  // root scaling then holds exactly, not just to rounding.
  return wkb_constants().coefficient * std::pow(n + 0.5, 4.0 / 3.0) * std::cbrt(lambda);
}

double wkb_action(double energy, double lambda) {
  if (!(energy > 0.0)) {
    throw std::invalid_argument("wkb_action: energy must be > 0");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("wkb_action: lambda must be > 0");
  }
  const double x_t = std::pow(4.0 * energy / lambda, 0.25);  // turning point
  const auto& q = quadrature();
  // x = x_t sin(theta), theta in [-pi/2, pi/2]; the integrand
  // sqrt(E - lambda x^4 / 4) cos(theta) is analytic in theta, so the fixed
  // quadrature order is far beyond what double precision can resolve.
  double sum = 0.0;
  for (int i = 0; i < kQuadratureOrder; ++i) {
    const double theta = 0.5 * std::numbers::pi * q.nodes[i];
    const double x = x_t * std::sin(theta);
    const double radicand = energy - 0.25 * lambda * (x * x) * (x * x);
    sum += q.weights[i] * std::sqrt(std::max(0.0, radicand)) * std::cos(theta);
  }
  return 2.0 * std::sqrt(2.0) * x_t * 0.5 * std::numbers::pi * sum;
}

std::vector<WkbLevel> wkb_table(int count, double lambda) {
  if (count < 1) {
    throw std::invalid_argument("wkb_table: count must be >= 1");
  }
  std::vector<WkbLevel> levels(count);
  for (int n = 0; n < count; ++n) {
    levels[n] = {n, wkb_energy(n, lambda)};
  }
  return levels;
}

}  // namespace quartic
