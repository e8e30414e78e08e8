#pragma once

#include "quartic/oscillator.hpp"
#include "quartic/symmetric_matrix.hpp"

namespace quartic {

// Matrix element <n|H|m> in the number basis at frequency omega.  Nonzero
// only for |n - m| in {0, 2, 4}.
double hamiltonian_element(int n, int m, const OscillatorParams& params, double omega);

// Hamiltonian matrix over |0> ... |n_basis-1|, band offsets {0, 2, 4}.
SymmetricMatrix build_hamiltonian(const OscillatorParams& params, const BasisSpec& basis);

// Even / odd sub-blocks of a Hamiltonian-shaped matrix.  Since couplings
// change the ket index by 0, 2 or 4, states of even and odd index never mix
// and the matrix splits into two independent blocks (rows/columns 0,2,4,...
// and 1,3,5,...).  For an input of dimension N the blocks have dimensions
// ceil(N/2) and floor(N/2).
struct ParityBlocks {
  SymmetricMatrix even;
  SymmetricMatrix odd;
};

ParityBlocks parity_blocks(const SymmetricMatrix& h);

}  // namespace quartic
