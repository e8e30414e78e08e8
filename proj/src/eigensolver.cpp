#include "quartic/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace quartic {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = a[static_cast<std::size_t>(i) * n + j];
      sum += 2.0 * v * v;
    }
  }
  return std::sqrt(sum);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x, read off
// the signs of the LDL^T pivots of (T - x I).  A vanishing pivot is nudged
// to a tiny negative value, the standard trick to keep the sequence defined
// when x hits an eigenvalue of a leading minor.
int tridiagonal_count_below(std::span<const double> diag, std::span<const double> off,
                            double x) {
  constexpr double kPivotFloor = 1e-300;
  int count = 0;
  double d = diag[0] - x;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (std::abs(d) < kPivotFloor) d = -kPivotFloor;
    d = (diag[i] - x) - off[i - 1] * off[i - 1] / d;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

EigenDecomposition solve_symmetric(const SymmetricMatrix& m, double tol, int max_sweeps) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("solve_symmetric: tol must be > 0");
  }
  if (max_sweeps < 1) {
    throw std::invalid_argument("solve_symmetric: max_sweeps must be >= 1");
  }

  const int n = m.dim();
  EigenDecomposition out;
  out.dim = n;
  if (n == 0) return out;

  std::vector<double> a = m.entries();
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double threshold = tol * m.frobenius_norm();
  auto at = [&](std::vector<double>& buf, int r, int c) -> double& {
    return buf[static_cast<std::size_t>(r) * n + c];
  };

  int sweeps = 0;
  while (off_diagonal_norm(a, n) > threshold) {
    if (sweeps == max_sweeps) {
      throw ConvergenceError("solve_symmetric: rotation sweeps exhausted",
                             off_diagonal_norm(a, n));
    }
    // One row-cyclic sweep: annihilate each (p, q) above the diagonal once.
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        // Stable half-angle choice: the root of smaller magnitude of
        // t^2 + 2 t theta - 1 = 0, so |t| <= 1 and the rotation never
        // exceeds 45 degrees.
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        at(a, p, p) -= t * apq;
        at(a, q, q) += t * apq;
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(a, r, p);
          const double arq = at(a, r, q);
          at(a, r, p) = c * arp - s * arq;
          at(a, p, r) = at(a, r, p);
          at(a, r, q) = s * arp + c * arq;
          at(a, q, r) = at(a, r, q);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = at(v, r, p);
          const double vrq = at(v, r, q);
          at(v, r, p) = c * vrp - s * vrq;
          at(v, r, q) = s * vrp + c * vrq;
        }
      }
    }
    ++sweeps;
  }
  out.sweeps_used = sweeps;

  // Sort ascending and permute the eigenvector columns to match.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return at(a, i, i) < at(a, j, j);
  });

  out.values.resize(n);
  out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    out.values[j] = at(a, order[j], order[j]);
    for (int r = 0; r < n; ++r) {
      out.vectors[static_cast<std::size_t>(r) * n + j] = at(v, r, order[j]);
    }
  }

  // Certify against the original matrix, not the rotated copy.
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) {
      double acc = 0.0;
      for (int ccol = 0; ccol < n; ++ccol) {
        acc += m(r, ccol) * out.vectors[static_cast<std::size_t>(ccol) * n + j];
      }
      acc -= out.values[j] * out.vectors[static_cast<std::size_t>(r) * n + j];
      norm2 += acc * acc;
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  out.residual_norm = worst;
  return out;
}

std::vector<double> eigenvalues_sorted(const SymmetricMatrix& a) {
  return solve_symmetric(a).values;
}

std::vector<double> lowest_tridiagonal_eigenvalues(std::span<const double> diagonal,
                                                   std::span<const double> off_diagonal,
                                                   int count) {
  const int n = static_cast<int>(diagonal.size());
  if (n < 1) {
    throw std::invalid_argument("lowest_tridiagonal_eigenvalues: empty diagonal");
  }
  if (static_cast<int>(off_diagonal.size()) != n - 1) {
    throw std::invalid_argument(
        "lowest_tridiagonal_eigenvalues: off-diagonal length must be dim - 1");
  }
  if (count < 1 || count > n) {
    throw std::invalid_argument(
        "lowest_tridiagonal_eigenvalues: count must be in [1, dim]");
  }

  // Gershgorin enclosure of the whole spectrum.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(off_diagonal[i - 1]) : 0.0) +
                          (i + 1 < n ? std::abs(off_diagonal[i]) : 0.0);
    lo = std::min(lo, diagonal[i] - radius);
    hi = std::max(hi, diagonal[i] + radius);
  }

  std::vector<double> values(count);
  for (int k = 0; k < count; ++k) {
    double a = lo;
    double b = hi;
    // Shrink until the interval is at relative machine resolution; the
    // iteration cap only guards against pathological rounding stalls.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (tridiagonal_count_below(diagonal, off_diagonal, mid) >= k + 1) {
        b = mid;
      } else {
        a = mid;
      }
      if (b - a <= 1e-14 * (std::abs(a) + std::abs(b)) + 1e-300) break;
    }
    values[k] = 0.5 * (a + b);
    lo = a;  // eigenvalue k+1 cannot lie below the bracket just found
  }
  return values;
}

}  // namespace quartic
