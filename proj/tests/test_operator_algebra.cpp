#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quartic/operator_algebra.hpp"

#include <cmath>
#include <vector>

using quartic::BasisSpec;
using quartic::OscillatorParams;
using quartic::SymmetricMatrix;
using quartic::build_hamiltonian;
using quartic::hamiltonian_element;
using quartic::parity_blocks;

namespace {

// Textbook forms of the k = 0, lambda = 1 matrix elements at frequency w,
// written term by term exactly as they come out of the operator expansion,
// with no regrouping.  Used to cross-check the production grouping.
double plain_diag(int n, double w) {
  return w * (2 * n + 1) / 4.0 + (6.0 * n * n + 6.0 * n + 3.0) / (16.0 * w * w);
}

double plain_off2(int n, double w) {
  const double root = std::sqrt((n + 1.0) * (n + 2.0));
  return -w * root / 4.0 + (2.0 * n + 3.0) * root / (8.0 * w * w);
}

double plain_off4(int n, double w) {
  return std::sqrt((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0)) / (16.0 * w * w);
}

// Same for general k: kinetic, quadratic and quartic contributions summed
// separately.
double plain_diag_k(int n, double k, double lambda, double w) {
  return w * (2 * n + 1) / 4.0 + k * (2 * n + 1) / (4.0 * w) +
         lambda * (6.0 * n * n + 6.0 * n + 3.0) / (16.0 * w * w);
}

double plain_off2_k(int n, double k, double lambda, double w) {
  const double root = std::sqrt((n + 1.0) * (n + 2.0));
  return -w * root / 4.0 + k * root / (4.0 * w) + lambda * (2.0 * n + 3.0) * root / (8.0 * w * w);
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * (std::abs(a) + std::abs(b) + 1e-300);
}

}  // namespace

TEST_CASE("matrix elements at omega 2.16 for the pure quartic oscillator") {
  const OscillatorParams params{0.0, 1.0};
  const double w = 2.16;
  CHECK(hamiltonian_element(0, 0, params, w) == doctest::Approx(0.58018775720164609).epsilon(1e-14));
  CHECK(hamiltonian_element(0, 2, params, w) == doctest::Approx(-0.65000718112962148).epsilon(1e-14));
  CHECK(hamiltonian_element(0, 4, params, w) == doctest::Approx(0.065626332700595264).epsilon(1e-14));
  CHECK(hamiltonian_element(2, 0, params, w) == hamiltonian_element(0, 2, params, w));
  CHECK(hamiltonian_element(4, 0, params, w) == hamiltonian_element(0, 4, params, w));
}

TEST_CASE("elements vanish outside the {0, 2, 4} bands") {
  const OscillatorParams params{0.7, 1.3};
  for (int n = 0; n < 12; ++n) {
    for (int offset : {1, 3, 5, 6, 7}) {
      CHECK(hamiltonian_element(n, n + offset, params, 1.9) == 0.0);
      CHECK(hamiltonian_element(n + offset, n, params, 1.9) == 0.0);
    }
  }
}

TEST_CASE("element symmetry under index swap is exact") {
  const OscillatorParams params{0.3, 2.5};
  for (int n = 0; n < 10; ++n) {
    for (int m = 0; m < 10; ++m) {
      CHECK(hamiltonian_element(n, m, params, 0.8) == hamiltonian_element(m, n, params, 0.8));
    }
  }
}

TEST_CASE("production grouping agrees with the ungrouped textbook forms") {
  for (double w : {0.5, 1.0, 2.16, 3.7}) {
    for (int n = 0; n <= 20; ++n) {
      const OscillatorParams quartic_only{0.0, 1.0};
      CHECK(close_rel(hamiltonian_element(n, n, quartic_only, w), plain_diag(n, w), 1e-13));
      CHECK(close_rel(hamiltonian_element(n, n + 2, quartic_only, w), plain_off2(n, w), 1e-13));
      CHECK(close_rel(hamiltonian_element(n, n + 4, quartic_only, w), plain_off4(n, w), 1e-13));

      const OscillatorParams mixed{1.7, 0.4};
      CHECK(close_rel(hamiltonian_element(n, n, mixed, w), plain_diag_k(n, 1.7, 0.4, w), 1e-12));
      CHECK(close_rel(hamiltonian_element(n, n + 2, mixed, w), plain_off2_k(n, 1.7, 0.4, w), 1e-12));
    }
  }
}

TEST_CASE("harmonic special case k = omega^2 is exactly diagonal") {
  for (double w : {0.5, 1.0, 2.16}) {
    const OscillatorParams params{w * w, 0.0};
    for (int n = 0; n <= 20; ++n) {
      CHECK(hamiltonian_element(n, n, params, w) == (n + 0.5) * w);
      CHECK(hamiltonian_element(n, n + 2, params, w) == 0.0);
      CHECK(hamiltonian_element(n, n + 4, params, w) == 0.0);
    }
  }
}

TEST_CASE("element argument validation") {
  const OscillatorParams params{0.0, 1.0};
  CHECK_THROWS_AS(hamiltonian_element(-1, 0, params, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_element(0, -3, params, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_element(0, 0, params, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_element(0, 0, params, -2.0), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((OscillatorParams{0.0, -1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((OscillatorParams{0.0, 0.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW((OscillatorParams{1.0, 0.0}).validate());
  CHECK_NOTHROW((OscillatorParams{-1.0, 0.5}).validate());
  CHECK_THROWS_AS((BasisSpec{0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((BasisSpec{5, 0.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian({0.0, -1.0}, {5, 1.0}), std::invalid_argument);
}

TEST_CASE("built Hamiltonian has the declared shape") {
  const auto h = build_hamiltonian({0.0, 1.0}, {10, 2.16});
  CHECK(h.dim() == 10);
  CHECK(h.band_offsets() == std::vector<int>{0, 2, 4});
  CHECK(h(0, 0) == doctest::Approx(0.58018775720164609).epsilon(1e-14));
  CHECK(h(0, 2) == h(2, 0));
  CHECK(h(0, 1) == 0.0);
  CHECK(h(3, 8) == 0.0);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      CHECK(h(i, j) == hamiltonian_element(i, j, {0.0, 1.0}, 2.16));
    }
  }
}

TEST_CASE("harmonic Hamiltonian is the exact ladder diagonal") {
  const auto h = build_hamiltonian({1.0, 0.0}, {5, 1.0});
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(h(i, j) == (i == j ? i + 0.5 : 0.0));
    }
  }
}

TEST_CASE("single-state basis") {
  const auto h = build_hamiltonian({0.0, 1.0}, {1, 2.16});
  CHECK(h.dim() == 1);
  CHECK(h(0, 0) == doctest::Approx(0.58018775720164609).epsilon(1e-14));
}

TEST_CASE("symmetric matrix construction enforces its invariants") {
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 2.0, 3.0, 4.0}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 2.0, 2.0, 4.0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 0.0, 0.0}, {0}), std::invalid_argument);
  CHECK_NOTHROW(SymmetricMatrix(2, {1.0, 2.0, 2.0, 4.0}, {0, 1}));
  CHECK_NOTHROW(SymmetricMatrix(0, {}, {}));

  const SymmetricMatrix m(2, {1.0, 2.0, 2.0, 4.0}, {1, 0});
  CHECK(m.band_offsets() == std::vector<int>{0, 1});  // normalised
  CHECK(m.trace() == 5.0);
  CHECK(m.frobenius_norm() == doctest::Approx(5.0));  // sqrt(1 + 4 + 4 + 16)
}

TEST_CASE("parity blocks pick out even and odd sublattices") {
  const auto h = build_hamiltonian({0.0, 1.0}, {10, 2.16});
  const auto blocks = parity_blocks(h);
  CHECK(blocks.even.dim() == 5);
  CHECK(blocks.odd.dim() == 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(blocks.even(i, j) == h(2 * i, 2 * j));
      CHECK(blocks.odd(i, j) == h(2 * i + 1, 2 * j + 1));
    }
  }
}

TEST_CASE("parity blocks of odd dimension and of a single state") {
  const auto h7 = build_hamiltonian({0.0, 1.0}, {7, 1.5});
  const auto blocks7 = parity_blocks(h7);
  CHECK(blocks7.even.dim() == 4);
  CHECK(blocks7.odd.dim() == 3);

  const auto h1 = build_hamiltonian({0.0, 1.0}, {1, 1.5});
  const auto blocks1 = parity_blocks(h1);
  CHECK(blocks1.even.dim() == 1);
  CHECK(blocks1.even(0, 0) == h1(0, 0));
  CHECK(blocks1.odd.dim() == 0);
}

TEST_CASE("parity blocks of a diagonal matrix stay diagonal") {
  const auto h = build_hamiltonian({1.0, 0.0}, {6, 1.0});
  const auto blocks = parity_blocks(h);
  for (int i = 0; i < 3; ++i) {
    CHECK(blocks.even(i, i) == 2 * i + 0.5);
    CHECK(blocks.odd(i, i) == 2 * i + 1.5);
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        CHECK(blocks.even(i, j) == 0.0);
        CHECK(blocks.odd(i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("parity split rejects matrices that mix parity") {
  const SymmetricMatrix mixing(2, {1.0, 0.5, 0.5, 2.0}, {0, 1});
  CHECK_THROWS_AS(parity_blocks(mixing), std::invalid_argument);
}
