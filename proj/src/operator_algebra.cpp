#include "quartic/operator_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace quartic {

// With x = (a + a^dag)/sqrt(2 omega) and p = i sqrt(omega/2) (a^dag - a),
// normal ordering of p^2, x^2 and x^4 gives the band entries
//
//   <n|H|n>     = (2n+1)/4 * (omega + k/omega) + lambda (6n^2 + 6n + 3) / (16 omega^2)
//   <n|H|n+2>   = sqrt((n+1)(n+2)) * [ (k - omega^2)/(4 omega) + lambda (2n+3) / (8 omega^2) ]
//   <n|H|n+4>   = lambda sqrt((n+1)(n+2)(n+3)(n+4)) / (16 omega^2)
//
// and zero elsewhere.  The kinetic and quadratic pieces are deliberately
// grouped as (omega + k/omega) and (k - omega^2): when k equals omega^2 the
// off-diagonal coupling cancels identically in floating point, so the
// harmonic special case stays exactly diagonal instead of only approximately.
double hamiltonian_element(int n, int m, const OscillatorParams& params, double omega) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("hamiltonian_element: basis indices must be >= 0");
  }
  if (!(omega > 0.0)) {
    throw std::invalid_argument("hamiltonian_element: omega must be > 0");
  }

  const int lo = std::min(n, m);
  const double k = params.k;
  const double lambda = params.lambda;

  switch (std::abs(n - m)) {
    case 0:
      return 0.25 * (2 * lo + 1) * (omega + k / omega) +
             lambda * (6.0 * lo * lo + 6.0 * lo + 3.0) / (16.0 * omega * omega);
    case 2:
      return std::sqrt((lo + 1.0) * (lo + 2.0)) *
             ((k - omega * omega) / (4.0 * omega) +
              lambda * (2 * lo + 3) / (8.0 * omega * omega));
    case 4:
      return lambda * std::sqrt((lo + 1.0) * (lo + 2.0) * (lo + 3.0) * (lo + 4.0)) /
             (16.0 * omega * omega);
    default:
      return 0.0;
  }
}

SymmetricMatrix build_hamiltonian(const OscillatorParams& params, const BasisSpec& basis) {
  params.validate();
  basis.validate();
  return SymmetricMatrix::build(basis.n_basis, {0, 2, 4}, [&](int i, int j) {
    return hamiltonian_element(i, j, params, basis.omega);
  });
}

ParityBlocks parity_blocks(const SymmetricMatrix& h) {
  for (int b : h.band_offsets()) {
    if (b != 0 && b != 2 && b != 4) {
      throw std::invalid_argument("parity_blocks: matrix couples states of unlike parity");
    }
  }
  const int n_even = (h.dim() + 1) / 2;
  const int n_odd = h.dim() / 2;
  auto even = SymmetricMatrix::build(n_even, {0, 1, 2},
                                     [&](int i, int j) { return h(2 * i, 2 * j); });
  auto odd = SymmetricMatrix::build(n_odd, {0, 1, 2},
                                    [&](int i, int j) { return h(2 * i + 1, 2 * j + 1); });
  return {std::move(even), std::move(odd)};
}

}  // namespace quartic
