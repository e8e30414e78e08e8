#include "quartic/fd_oracle.hpp"

#include "quartic/eigensolver.hpp"

#include <cmath>
#include <stdexcept>

namespace quartic {

std::vector<double> fd_spectrum(const OscillatorParams& params, const GridSpec& grid,
                                int count) {
  params.validate();
  grid.validate();
  if (count < 1) {
    throw std::invalid_argument("fd_spectrum: count must be >= 1");
  }
  if (count > grid.points) {
    throw std::invalid_argument("fd_spectrum: count exceeds the number of grid points");
  }

  const int m = grid.points;
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(m);
  std::vector<double> off(m - 1, -0.5 * inv_h2);
  for (int i = 0; i < m; ++i) {
    const double x = -grid.half_width + h * (i + 1);
    const double x2 = x * x;
    diag[i] = inv_h2 + 0.5 * params.k * x2 + 0.25 * params.lambda * x2 * x2;
  }
  return lowest_tridiagonal_eigenvalues(diag, off, count);
}

std::vector<double> richardson_pair(const OscillatorParams& params, const GridSpec& grid,
                                    int count) {
  const auto coarse = fd_spectrum(params, grid, count);
  // points' = 2 points + 1 halves the spacing exactly, so the coarse nodes
  // are a subset of the fine ones and the h^2 cancellation is clean.
  const auto fine = fd_spectrum(params, GridSpec{grid.half_width, 2 * grid.points + 1},
                                count);
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  }
  return out;
}

double default_half_width(const OscillatorParams& params, double e_max) {
  params.validate();
  if (!(e_max > 0.0)) {
    throw std::invalid_argument("default_half_width: e_max must be > 0");
  }
  if (params.lambda == 0.0) {
    return std::ceil(std::sqrt(6.0 * e_max / params.k));
  }
  // V(L) = 3 e_max as a quadratic in L^2, written in the cancellation-free
  // form for either sign of k.
  const double root = std::sqrt(params.k * params.k + 12.0 * e_max * params.lambda);
  const double l2 = params.k > 0.0 ? 12.0 * e_max / (params.k + root)
                                   : (root - params.k) / params.lambda;
  return std::ceil(std::sqrt(l2));
}

}  // namespace quartic
