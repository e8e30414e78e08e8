#pragma once

#include <stdexcept>

namespace quartic {

// Physical constants of H = p^2/2 + (k/2) x^2 + (lambda/4) x^4, in units
// with mass and hbar fixed to 1.  A negative k is admitted (double well);
// lambda = 0 requires k > 0, otherwise the spectrum is not discrete.
struct OscillatorParams {
  double k = 0.0;       // quadratic stiffness
  double lambda = 1.0;  // quartic coupling, >= 0

  void validate() const {
    if (!(lambda >= 0.0)) {
      throw std::invalid_argument("OscillatorParams: lambda must be >= 0");
    }
    if (lambda == 0.0 && !(k > 0.0)) {
      throw std::invalid_argument("OscillatorParams: k must be > 0 when lambda is 0");
    }
  }
};

// Truncated number-ket basis |0> ... |n_basis-1> generated by ladder
// operators at frequency omega.  omega is a free variational parameter,
// not a property of the oscillator itself.
struct BasisSpec {
  int n_basis = 10;
  double omega = 2.16;

  void validate() const {
    if (n_basis < 1) {
      throw std::invalid_argument("BasisSpec: n_basis must be >= 1");
    }
    if (!(omega > 0.0)) {
      throw std::invalid_argument("BasisSpec: omega must be > 0");
    }
  }
};

}  // namespace quartic
