#pragma once

#include "quartic/symmetric_matrix.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

// Result of diagonalising a symmetric matrix.  Eigenvalues are ascending;
// column j of `vectors` (row-major, dim x dim) is the unit eigenvector
// paired with values[j].
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<double> vectors;
  int dim = 0;
  int sweeps_used = 0;
  double residual_norm = 0.0;  // max_j |A v_j - values[j] v_j|_2 against the input matrix

  double vector_entry(int row, int col) const {
    return vectors[static_cast<std::size_t>(row) * dim + col];
  }
};

// Thrown when the sweep budget runs out before the off-diagonal mass drops
// below tolerance; carries the residual off-diagonal norm for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double off_norm)
      : std::runtime_error(what), off_norm_(off_norm) {}

  double off_norm() const noexcept { return off_norm_; }

 private:
  double off_norm_;
};

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr int kDefaultMaxSweeps = 100;

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
// tol times the Frobenius norm of the input.
EigenDecomposition solve_symmetric(const SymmetricMatrix& a,
                                   double tol = kDefaultSolverTol,
                                   int max_sweeps = kDefaultMaxSweeps);

// Convenience wrapper returning only the ascending eigenvalues.
std::vector<double> eigenvalues_sorted(const SymmetricMatrix& a);

// First `count` eigenvalues (ascending) of the symmetric tridiagonal matrix
// with the given diagonal and off-diagonal, by Sturm-sequence bisection.
// Handles dimensions far beyond what dense rotation sweeps can reach, which
// is what the finite-difference grids need.
std::vector<double> lowest_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                   std::span<const double> off_diagonal,
                                                   int count);

}  // namespace quartic
