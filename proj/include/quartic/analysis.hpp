#pragma once

#include "quartic/eigensolver.hpp"
#include "quartic/oscillator.hpp"

#include <span>
#include <vector>

namespace quartic {

// Lowest part of the spectrum of a truncated Hamiltonian, together with the
// inputs that produced it so output formatters can echo them.
struct Spectrum {
  std::vector<double> levels;  // ascending; size = min(count requested, n_basis)
  OscillatorParams params;
  BasisSpec basis;
  double solver_tol = kDefaultSolverTol;
  int sweeps_used = 0;
};

// Builds the Hamiltonian, splits it into parity blocks, diagonalises each
// block and merges the results.  The split respects the exact decoupling of
// even and odd states and roughly halves the rotation work.
Spectrum compute_spectrum(const OscillatorParams& params, const BasisSpec& basis,
                          int count);

// Maps a spectrum computed at k = 0, lambda = 1 to coupling lambda_target
// using the cube-root scaling E_n(lambda) = lambda^(1/3) E_n(1), which is an
// identity of the k = 0 problem (substitute x -> lambda^(-1/6) x).  The
// reported basis frequency is scaled by the same factor, matching the basis
// in which a direct computation would reproduce these numbers.
Spectrum scale_spectrum(const Spectrum& base, double lambda_target);

struct OmegaSearch {
  double lo = 0.5;
  double hi = 6.0;
  double tol = 1e-4;  // final bracket width

  void validate() const {
    if (!(lo > 0.0) || !(hi > lo)) {
      throw std::invalid_argument("OmegaSearch: need 0 < lo < hi");
    }
    if (!(tol > 0.0)) {
      throw std::invalid_argument("OmegaSearch: tol must be > 0");
    }
  }
};

struct OmegaOptimum {
  double omega_star = 0.0;
  double ground_energy = 0.0;
};

// Golden-section minimisation of the truncated ground-state energy
// E_0(omega) at fixed basis size.  E_0(omega) is smooth with a single
// interior minimum over any reasonable bracket, and its minimiser is the
// frequency at which the truncated basis works hardest.
OmegaOptimum optimize_omega(const OscillatorParams& params, int n_basis,
                            const OmegaSearch& search = {});

struct ConvergenceReport {
  double omega = 0.0;
  std::vector<int> sizes;
  std::vector<double> ground_energies;
  std::vector<double> deltas;  // |E_0(sizes[i+1]) - E_0(sizes[i])|
  bool converged = false;
};

inline constexpr double kConvergenceThreshold = 1e-8;

// Ground-state energy at a ladder of basis sizes (strictly increasing).
// Enlarging the basis can only lower each variational level, so the
// sequence is non-increasing; `converged` records whether the last
// increment fell below kConvergenceThreshold.
ConvergenceReport convergence_study(const OscillatorParams& params, double omega,
                                    std::span<const int> sizes);

}  // namespace quartic
