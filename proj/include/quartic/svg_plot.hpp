#pragma once

#include "quartic/oscillator.hpp"

#include <string>
#include <vector>

namespace quartic {

// One family of horizontal level markers, e.g. the computed spectrum or a
// semiclassical estimate.  `label` doubles as the CSS class on each segment.
struct LevelSet {
  std::string label;
  std::string color;
  std::vector<double> energies;
};

struct PlotSpec {
  OscillatorParams potential;
  std::vector<LevelSet> level_sets;
  double x_max = 0.0;        // plot window is [-x_max, x_max]
  int width = 800;           // pixels
  int height = 1000;         // pixels
  bool full_width = false;   // draw levels across the window, not just between turning points
};

// Positive solution of V(x) = energy.
double classical_turning_point(const OscillatorParams& params, double energy);

// Standalone SVG: the potential curve plus one horizontal segment per level,
// each clipped to its classical turning points unless full_width is set.
// Output is deterministic byte for byte.
std::string render_levels_svg(const PlotSpec& spec);

}  // namespace quartic
