#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quartic/analysis.hpp"
#include "quartic/fd_oracle.hpp"

#include "oracle_utils.hpp"

#include <cmath>
#include <vector>

using quartic::GridSpec;
using quartic::OscillatorParams;
using quartic::compute_spectrum;
using quartic::default_half_width;
using quartic::fd_spectrum;
using quartic::richardson_pair;

namespace {

const OscillatorParams kQuartic{0.0, 1.0};

// Fully converged lambda = 1 levels, for gauging the O(h^2) grid error.
const std::vector<double> kConvergedLevels = {
    0.420804974475448, 1.507901241160041, 2.95879568747932,  4.621220318665905,
    6.453509932311672, 8.428453878124815, 10.52783076602142, 12.73833694327324,
    15.049752931026212, 17.453934157604362};

}  // namespace

TEST_CASE("grid spacing covers the box including both walls") {
  const GridSpec grid{8.0, 3999};
  CHECK(grid.spacing() == doctest::Approx(0.004).epsilon(1e-15));
}

TEST_CASE("harmonic levels on the stated grid") {
  const auto levels = fd_spectrum({1.0, 0.0}, {10.0, 2000}, 3);
  REQUIRE(levels.size() == 3);
  // Second-order discretisation error at h = 0.01 reaches a few 1e-5 by the
  // third level; the ground state is an order better.
  CHECK(std::abs(levels[0] - 0.5) < 1e-5);
  CHECK(std::abs(levels[1] - 1.5) < 5e-5);
  CHECK(std::abs(levels[2] - 2.5) < 5e-5);
}

TEST_CASE("quartic ground state on a fine grid") {
  const auto levels = fd_spectrum(kQuartic, {8.0, 4000}, 1);
  CHECK(std::abs(levels[0] - 0.420804974475448) < 1e-5);
  CHECK(std::abs(levels[0] - 0.420805) < 1e-5);
}

TEST_CASE("ten quartic levels track the converged spectrum") {
  const auto levels = fd_spectrum(kQuartic, {8.0, 4000}, 10);
  REQUIRE(levels.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(std::abs(levels[i] - kConvergedLevels[i]) < 2e-3);
  }
}

TEST_CASE("discretisation error shrinks by four per spacing halving") {
  // Box 8, interior counts chosen so each grid halves the previous spacing.
  const double truth = kConvergedLevels[0];
  const double e1 = std::abs(fd_spectrum(kQuartic, {8.0, 500}, 1)[0] - truth);
  const double e2 = std::abs(fd_spectrum(kQuartic, {8.0, 1001}, 1)[0] - truth);
  const double e3 = std::abs(fd_spectrum(kQuartic, {8.0, 2003}, 1)[0] - truth);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("box size is irrelevant once the walls are far out") {
  // Same spacing h = 0.004 in both boxes, so the difference isolates the
  // wall effect rather than mixing in a change of h.
  const double in_box8 = fd_spectrum(kQuartic, {8.0, 3999}, 1)[0];
  const double in_box10 = fd_spectrum(kQuartic, {10.0, 4999}, 1)[0];
  CHECK(std::abs(in_box8 - in_box10) < 1e-8);
}

TEST_CASE("Richardson extrapolation removes the h^2 error: harmonic") {
  const auto levels = richardson_pair({1.0, 0.0}, {10.0, 1000}, 1);
  CHECK(std::abs(levels[0] - 0.5) < 1e-8);
}

TEST_CASE("Richardson extrapolation removes the h^2 error: quartic") {
  const auto levels = richardson_pair(kQuartic, {8.0, 2000}, 1);
  CHECK(std::abs(levels[0] - 0.420805) < 1e-6);
  CHECK(std::abs(levels[0] - 0.420804974475448) < 1e-9);
}

TEST_CASE("Richardson extrapolation at strong coupling") {
  const auto levels = richardson_pair({0.0, 8.0}, {6.0, 2000}, 1);
  CHECK(std::abs(levels[0] - 0.841610) < 1e-5);
}

TEST_CASE("grid route and basis route agree on ten levels") {
  const auto grid_levels = richardson_pair(kQuartic, {8.0, 2000}, 10);
  const auto basis_levels = compute_spectrum(kQuartic, {80, 2.16}, 10).levels;
  CHECK(testutil::max_abs_diff(grid_levels, basis_levels) < 1e-5);
}

TEST_CASE("grid and count validation") {
  CHECK_THROWS_AS(fd_spectrum(kQuartic, {0.0, 100}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_spectrum(kQuartic, {8.0, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_spectrum(kQuartic, {8.0, 100}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fd_spectrum(kQuartic, {8.0, 100}, 101), std::invalid_argument);
  CHECK_THROWS_AS((fd_spectrum({0.0, 0.0}, {8.0, 100}, 1)), std::invalid_argument);
}

TEST_CASE("automatic box sizing keeps the walls above three times the top energy") {
  CHECK(default_half_width(kQuartic, 17.45) == 4.0);
  CHECK(default_half_width({1.0, 0.0}, 2.5) == 4.0);
  for (double e_max : {0.5, 3.0, 20.0, 200.0}) {
    for (const OscillatorParams& p :
         {kQuartic, OscillatorParams{1.0, 0.0}, OscillatorParams{2.0, 0.3},
          OscillatorParams{-1.0, 0.5}}) {
      const double half = default_half_width(p, e_max);
      const double wall = 0.5 * p.k * half * half + 0.25 * p.lambda * half * half * half * half;
      CHECK(wall >= 3.0 * e_max - 1e-9);
    }
  }
  CHECK_THROWS_AS(default_half_width(kQuartic, 0.0), std::invalid_argument);
}
