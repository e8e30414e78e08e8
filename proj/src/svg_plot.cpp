#include "quartic/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace quartic {

namespace {

// Fixed two-decimal pixel coordinates keep the output stable across
// platforms and make diffs readable.
std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double potential_at(const OscillatorParams& p, double x) {
  const double x2 = x * x;
  return 0.5 * p.k * x2 + 0.25 * p.lambda * x2 * x2;
}

// Largest of 1, 2, 5 times a power of ten that still yields at least
// `target` intervals over `range`.
double tick_step(double range, int target) {
  const double raw = range / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (mag * m >= raw) return mag * m;
  }
  return 10.0 * mag;
}

}  // namespace

double classical_turning_point(const OscillatorParams& params, double energy) {
  params.validate();
  if (!(energy > 0.0)) {
    throw std::invalid_argument("classical_turning_point: energy must be > 0");
  }
  if (params.lambda == 0.0) {
    return std::sqrt(2.0 * energy / params.k);
  }
  // V(x) = E as a quadratic in x^2; pick the form without cancellation for
  // the sign of k at hand.
  const double root = std::sqrt(params.k * params.k + 4.0 * params.lambda * energy);
  const double x2 = params.k > 0.0 ? 4.0 * energy / (params.k + root)
                                   : (root - params.k) / params.lambda;
  return std::sqrt(x2);
}

std::string render_levels_svg(const PlotSpec& spec) {
  spec.potential.validate();
  if (!(spec.x_max > 0.0)) {
    throw std::invalid_argument("render_levels_svg: x_max must be > 0");
  }
  if (spec.width < 200 || spec.height < 200) {
    throw std::invalid_argument("render_levels_svg: canvas must be at least 200x200");
  }
  if (spec.level_sets.empty()) {
    throw std::invalid_argument("render_levels_svg: no level sets to draw");
  }
  double e_top = 0.0;
  for (const auto& set : spec.level_sets) {
    if (set.energies.empty()) {
      throw std::invalid_argument("render_levels_svg: empty level set '" + set.label + "'");
    }
    for (double e : set.energies) {
      if (!(e > 0.0)) {
        throw std::invalid_argument("render_levels_svg: level energies must be > 0");
      }
      e_top = std::max(e_top, e);
    }
  }

  const double y_max = std::max(potential_at(spec.potential, spec.x_max), 1.1 * e_top);
  const int ml = 60, mr = 20, mt = 20, mb = 45;
  const double plot_w = spec.width - ml - mr;
  const double plot_h = spec.height - mt - mb;
  auto to_px_x = [&](double x) { return ml + (x + spec.x_max) / (2.0 * spec.x_max) * plot_w; };
  auto to_px_y = [&](double e) { return mt + (1.0 - e / y_max) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
      << spec.height << "\">\n";
  svg << "<rect width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<clipPath id=\"plot-area\"><rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
      << px(plot_w) << "\" height=\"" << px(plot_h) << "\"/></clipPath>\n";

  // Potential curve, clipped so steep flanks do not spill past the frame.
  svg << "<polyline class=\"potential\" clip-path=\"url(#plot-area)\" fill=\"none\" "
         "stroke=\"#333333\" stroke-width=\"1.5\" points=\"";
  const int samples = 480;
  for (int i = 0; i <= samples; ++i) {
    const double x = -spec.x_max + 2.0 * spec.x_max * i / samples;
    if (i > 0) svg << " ";
    svg << px(to_px_x(x)) << "," << px(to_px_y(std::min(potential_at(spec.potential, x), y_max * 1.05)));
  }
  svg << "\"/>\n";

  for (const auto& set : spec.level_sets) {
    svg << "<g class=\"levels-" << set.label << "\" stroke=\"" << set.color
        << "\" stroke-width=\"1.2\">\n";
    for (double e : set.energies) {
      double half_span = spec.x_max;
      if (!spec.full_width) {
        half_span = std::min(classical_turning_point(spec.potential, e), spec.x_max);
      }
      svg << "<line class=\"level " << set.label << "\" x1=\"" << px(to_px_x(-half_span))
          << "\" y1=\"" << px(to_px_y(e)) << "\" x2=\"" << px(to_px_x(half_span))
          << "\" y2=\"" << px(to_px_y(e)) << "\"/>\n";
    }
    svg << "</g>\n";
  }

  // Frame and ticks.
  svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << px(plot_w)
      << "\" height=\"" << px(plot_h) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  const double x_step = tick_step(2.0 * spec.x_max, 8);
  for (int i = static_cast<int>(std::ceil(-spec.x_max / x_step));
       i * x_step <= spec.x_max * (1.0 + 1e-12); ++i) {
    const double x = i * x_step;
    const double cx = to_px_x(x);
    svg << "<line x1=\"" << px(cx) << "\" y1=\"" << px(mt + plot_h) << "\" x2=\"" << px(cx)
        << "\" y2=\"" << px(mt + plot_h + 5) << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << px(cx) << "\" y=\"" << px(mt + plot_h + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << sig6(x) << "</text>\n";
  }
  const double y_step = tick_step(y_max, 8);
  for (int i = 0; i * y_step <= y_max * (1.0 + 1e-12); ++i) {
    const double e = i * y_step;
    const double cy = to_px_y(e);
    svg << "<line x1=\"" << px(ml - 5.0) << "\" y1=\"" << px(cy) << "\" x2=\"" << ml
        << "\" y2=\"" << px(cy) << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << px(ml - 8.0) << "\" y=\"" << px(cy + 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << sig6(e)
        << "</text>\n";
  }
  svg << "<text x=\"" << px(ml + plot_w / 2.0) << "\" y=\"" << px(mt + plot_h + 35.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">x</text>\n";
  svg << "<text x=\"15\" y=\"" << px(mt + plot_h / 2.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 15 "
      << px(mt + plot_h / 2.0) << ")\">energy</text>\n";

  // Legend, top-left inside the frame.
  double ly = mt + 16.0;
  for (const auto& set : spec.level_sets) {
    svg << "<line x1=\"" << px(ml + 10.0) << "\" y1=\"" << px(ly) << "\" x2=\""
        << px(ml + 34.0) << "\" y2=\"" << px(ly) << "\" stroke=\"" << set.color
        << "\" stroke-width=\"1.2\"/>\n";
    svg << "<text x=\"" << px(ml + 40.0) << "\" y=\"" << px(ly + 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << set.label << "</text>\n";
    ly += 16.0;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace quartic
