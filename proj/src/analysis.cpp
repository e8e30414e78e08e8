#include "quartic/analysis.hpp"

#include "quartic/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace quartic {

Spectrum compute_spectrum(const OscillatorParams& params, const BasisSpec& basis,
                          int count) {
  if (count < 1) {
    throw std::invalid_argument("compute_spectrum: count must be >= 1");
  }
  const auto h = build_hamiltonian(params, basis);
  const auto blocks = parity_blocks(h);
  const auto even = solve_symmetric(blocks.even);
  const auto odd = solve_symmetric(blocks.odd);

  Spectrum out;
  out.params = params;
  out.basis = basis;
  out.sweeps_used = std::max(even.sweeps_used, odd.sweeps_used);
  out.levels.reserve(h.dim());
  std::merge(even.values.begin(), even.values.end(), odd.values.begin(), odd.values.end(),
             std::back_inserter(out.levels));
  out.levels.resize(std::min<std::size_t>(out.levels.size(), count));
  return out;
}

Spectrum scale_spectrum(const Spectrum& base, double lambda_target) {
  if (base.params.k != 0.0) {
    throw std::invalid_argument("scale_spectrum: cube-root scaling requires k = 0");
  }
  if (base.params.lambda != 1.0) {
    throw std::invalid_argument("scale_spectrum: base spectrum must be at lambda = 1");
  }
  if (!(lambda_target > 0.0)) {
    throw std::invalid_argument("scale_spectrum: lambda_target must be > 0");
  }
  const double factor = std::cbrt(lambda_target);
  Spectrum out = base;
  out.params.lambda = lambda_target;
  out.basis.omega = factor * base.basis.omega;
  for (double& e : out.levels) e = factor * e;
  return out;
}

OmegaOptimum optimize_omega(const OscillatorParams& params, int n_basis,
                            const OmegaSearch& search) {
  params.validate();
  if (n_basis < 1) {
    throw std::invalid_argument("optimize_omega: n_basis must be >= 1");
  }
  search.validate();

  auto ground = [&](double omega) {
    return compute_spectrum(params, BasisSpec{n_basis, omega}, 1).levels.front();
  };

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = search.lo;
  double b = search.hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = ground(x1);
  double f2 = ground(x2);
  while (b - a > search.tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = ground(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = ground(x2);
    }
  }
  const double omega_star = 0.5 * (a + b);
  return {omega_star, ground(omega_star)};
}

ConvergenceReport convergence_study(const OscillatorParams& params, double omega,
                                    std::span<const int> sizes) {
  params.validate();
  if (!(omega > 0.0)) {
    throw std::invalid_argument("convergence_study: omega must be > 0");
  }
  if (sizes.empty()) {
    throw std::invalid_argument("convergence_study: need at least one basis size");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1 || (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw std::invalid_argument("convergence_study: sizes must be strictly increasing");
    }
  }

  ConvergenceReport report;
  report.omega = omega;
  report.sizes.assign(sizes.begin(), sizes.end());
  for (int n : sizes) {
    report.ground_energies.push_back(
        compute_spectrum(params, BasisSpec{n, omega}, 1).levels.front());
  }
  for (std::size_t i = 1; i < report.ground_energies.size(); ++i) {
    report.deltas.push_back(
        std::abs(report.ground_energies[i] - report.ground_energies[i - 1]));
  }
  report.converged = !report.deltas.empty() && report.deltas.back() < kConvergenceThreshold;
  return report;
}

}  // namespace quartic
