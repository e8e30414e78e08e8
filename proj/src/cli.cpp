#include "quartic/cli.hpp"

#include "quartic/analysis.hpp"
#include "quartic/fd_oracle.hpp"
#include "quartic/svg_plot.hpp"
#include "quartic/wkb.hpp"

#include <CLI11.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quartic::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kComputedColor = "#CC0000";
constexpr const char* kWkbColor = "#888888";

// Shortest decimal form that round-trips to the same double; used wherever
// output is meant to be machine-read (CSV, key=value lines).
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string table_rows(const std::vector<double>& energies) {
  std::ostringstream os;
  os << "  n        energy\n";
  char buf[64];
  for (std::size_t i = 0; i < energies.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%3zu  %12.6g\n", i, energies[i]);
    os << buf;
  }
  return os.str();
}

std::string csv_rows(const std::vector<double>& energies) {
  std::string text = "n,energy\n";
  for (std::size_t i = 0; i < energies.size(); ++i) {
    text += std::to_string(i);
    text += ',';
    text += shortest(energies[i]);
    text += '\n';
  }
  return text;
}

ordered_json levels_json(const std::vector<double>& energies) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < energies.size(); ++i) {
    arr.push_back({{"n", i}, {"energy", energies[i]}});
  }
  return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void deliver(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  file << payload;
  file.flush();
  if (!file) {
    throw std::runtime_error("failed while writing output file: " + path);
  }
}

struct SpectrumArgs {
  int n_basis = 10;
  double omega = 2.16;
  double k = 0.0;
  double lambda = 1.0;
  int levels = 10;
  std::string format = "table";
  std::string output;
};

void run_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const Spectrum s =
      compute_spectrum(OscillatorParams{a.k, a.lambda}, BasisSpec{a.n_basis, a.omega},
                       a.levels);
  std::string payload;
  if (a.format == "json") {
    ordered_json j;
    j["params"]["k"] = s.params.k;
    j["params"]["lambda"] = s.params.lambda;
    j["basis"]["n_basis"] = s.basis.n_basis;
    j["basis"]["omega"] = s.basis.omega;
    j["levels"] = levels_json(s.levels);
    j["solver"]["tol"] = s.solver_tol;
    j["solver"]["sweeps"] = s.sweeps_used;
    payload = dump(j);
  } else if (a.format == "csv") {
    payload = csv_rows(s.levels);
  } else {
    std::ostringstream os;
    os << "# spectrum  k=" << shortest(s.params.k) << "  lambda=" << shortest(s.params.lambda)
       << "  n_basis=" << s.basis.n_basis << "  omega=" << shortest(s.basis.omega) << "\n";
    os << table_rows(s.levels);
    payload = os.str();
  }
  deliver(payload, a.output, out);
}

struct WkbArgs {
  int levels = 10;
  double lambda = 1.0;
  std::string format = "table";
  std::string output;
};

void run_wkb(const WkbArgs& a, std::ostream& out) {
  std::vector<double> energies;
  for (const WkbLevel& l : wkb_table(a.levels, a.lambda)) {
    energies.push_back(l.energy);
  }
  std::string payload;
  if (a.format == "json") {
    ordered_json j;
    j["lambda"] = a.lambda;
    j["levels"] = levels_json(energies);
    payload = dump(j);
  } else if (a.format == "csv") {
    payload = csv_rows(energies);
  } else {
    std::ostringstream os;
    os << "# wkb  lambda=" << shortest(a.lambda) << "\n";
    os << table_rows(energies);
    payload = os.str();
  }
  deliver(payload, a.output, out);
}

struct ScanArgs {
  int n_basis = 10;
  double k = 0.0;
  double lambda = 1.0;
  double lo = 0.5;
  double hi = 6.0;
  double tol = 1e-4;
};

void run_scan_omega(const ScanArgs& a, std::ostream& out) {
  const OmegaOptimum best = optimize_omega(OscillatorParams{a.k, a.lambda}, a.n_basis,
                                           OmegaSearch{a.lo, a.hi, a.tol});
  out << "n_basis=" << a.n_basis << "\n";
  out << "k=" << shortest(a.k) << "\n";
  out << "lambda=" << shortest(a.lambda) << "\n";
  out << "lo=" << shortest(a.lo) << "\n";
  out << "hi=" << shortest(a.hi) << "\n";
  out << "tol=" << shortest(a.tol) << "\n";
  out << "omega_star=" << shortest(best.omega_star) << "\n";
  out << "e0=" << shortest(best.ground_energy) << "\n";
}

struct ConvergeArgs {
  double omega = 2.16;
  double k = 0.0;
  double lambda = 1.0;
  std::vector<int> sizes = {10, 20, 40, 80};
};

void run_converge(const ConvergeArgs& a, std::ostream& out) {
  const ConvergenceReport report =
      convergence_study(OscillatorParams{a.k, a.lambda}, a.omega, a.sizes);
  out << "# convergence  k=" << shortest(a.k) << "  lambda=" << shortest(a.lambda)
      << "  omega=" << shortest(a.omega) << "\n";
  out << "     N                      E0         delta\n";
  char buf[96];
  for (std::size_t i = 0; i < report.sizes.size(); ++i) {
    if (i == 0) {
      std::snprintf(buf, sizeof buf, "%6d  %22.16g  %12s\n", report.sizes[i],
                    report.ground_energies[i], "-");
    } else {
      std::snprintf(buf, sizeof buf, "%6d  %22.16g  %12.3e\n", report.sizes[i],
                    report.ground_energies[i], report.deltas[i - 1]);
    }
    out << buf;
  }
  out << "converged: " << (report.converged ? "yes" : "no") << "\n";
}

struct OracleArgs {
  double half_width = 0.0;  // 0 = choose from the requested energy range
  int points = 2000;
  int levels = 10;
  double k = 0.0;
  double lambda = 1.0;
  std::string format = "table";
  std::string output;
};

void run_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.levels < 1) {
    throw std::invalid_argument("oracle: levels must be >= 1");
  }
  const OscillatorParams params{a.k, a.lambda};
  params.validate();
  double half_width = a.half_width;
  if (half_width <= 0.0) {
    // Rough top-of-range energy estimate: semiclassical quartic part plus
    // harmonic part, each an overestimate on its own.
    double e_est = 0.0;
    if (params.lambda > 0.0) e_est += wkb_energy(a.levels - 1, params.lambda);
    if (params.k > 0.0) e_est += std::sqrt(params.k) * (a.levels - 0.5);
    half_width = default_half_width(params, std::max(1.0, e_est));
  }
  const GridSpec grid{half_width, a.points};
  const std::vector<double> energies = fd_spectrum(params, grid, a.levels);

  std::string payload;
  if (a.format == "json") {
    ordered_json j;
    j["params"]["k"] = params.k;
    j["params"]["lambda"] = params.lambda;
    j["grid"]["half_width"] = grid.half_width;
    j["grid"]["points"] = grid.points;
    j["levels"] = levels_json(energies);
    payload = dump(j);
  } else if (a.format == "csv") {
    payload = csv_rows(energies);
  } else {
    std::ostringstream os;
    os << "# finite-difference  k=" << shortest(params.k) << "  lambda="
       << shortest(params.lambda) << "  half_width=" << shortest(grid.half_width)
       << "  points=" << grid.points << "\n";
    os << table_rows(energies);
    payload = os.str();
  }
  deliver(payload, a.output, out);
}

struct PlotArgs {
  int levels = 10;
  bool with_wkb = false;
  bool full_width = false;
  std::string output = "figure.svg";
  int width = 800;
  int height = 1000;
};

void run_plot(const PlotArgs& a, std::ostream& out) {
  if (a.levels < 1) {
    throw std::invalid_argument("plot: levels must be >= 1");
  }
  const OscillatorParams params{0.0, 1.0};
  const int n_basis = std::max(40, 4 * a.levels);
  const Spectrum s = compute_spectrum(params, BasisSpec{n_basis, 2.16}, a.levels);

  PlotSpec spec;
  spec.potential = params;
  spec.level_sets.push_back({"computed", kComputedColor, s.levels});
  if (a.with_wkb) {
    std::vector<double> energies;
    for (const WkbLevel& l : wkb_table(a.levels, 1.0)) {
      energies.push_back(l.energy);
    }
    spec.level_sets.push_back({"wkb", kWkbColor, std::move(energies)});
  }
  double e_top = 0.0;
  for (const LevelSet& set : spec.level_sets) {
    for (double e : set.energies) e_top = std::max(e_top, e);
  }
  spec.x_max = 1.1 * classical_turning_point(params, e_top);
  spec.width = a.width;
  spec.height = a.height;
  spec.full_width = a.full_width;
  deliver(render_levels_svg(spec), a.output, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quartic anharmonic oscillator: matrix spectra, semiclassical levels, "
               "finite-difference cross-checks and level diagrams"};
  app.name("quartic");
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"json", "csv", "table"});

  SpectrumArgs sp;
  auto* sp_cmd = app.add_subcommand("spectrum", "Eigenvalues of the truncated Hamiltonian");
  sp_cmd->add_option("--n-basis", sp.n_basis, "Basis size")->capture_default_str();
  sp_cmd->add_option("--omega", sp.omega, "Basis frequency")->capture_default_str();
  sp_cmd->add_option("--k", sp.k, "Quadratic stiffness")->capture_default_str();
  sp_cmd->add_option("--lambda", sp.lambda, "Quartic coupling")->capture_default_str();
  sp_cmd->add_option("--levels", sp.levels, "Number of levels to report")
      ->capture_default_str();
  sp_cmd->add_option("--format", sp.format, "Output format")
      ->check(format_check)
      ->capture_default_str();
  sp_cmd->add_option("--output", sp.output, "Write to file instead of stdout");

  WkbArgs wk;
  auto* wk_cmd = app.add_subcommand("wkb", "Closed-form semiclassical levels");
  wk_cmd->add_option("--levels", wk.levels, "Number of levels")->capture_default_str();
  wk_cmd->add_option("--lambda", wk.lambda, "Quartic coupling")->capture_default_str();
  wk_cmd->add_option("--format", wk.format, "Output format")
      ->check(format_check)
      ->capture_default_str();
  wk_cmd->add_option("--output", wk.output, "Write to file instead of stdout");

  ScanArgs sc;
  auto* sc_cmd = app.add_subcommand(
      "scan-omega", "Minimise the truncated ground-state energy over the basis frequency");
  sc_cmd->add_option("--n-basis", sc.n_basis, "Basis size")->capture_default_str();
  sc_cmd->add_option("--k", sc.k, "Quadratic stiffness")->capture_default_str();
  sc_cmd->add_option("--lambda", sc.lambda, "Quartic coupling")->capture_default_str();
  sc_cmd->add_option("--lo", sc.lo, "Lower end of the bracket")->capture_default_str();
  sc_cmd->add_option("--hi", sc.hi, "Upper end of the bracket")->capture_default_str();
  sc_cmd->add_option("--tol", sc.tol, "Final bracket width")->capture_default_str();

  ConvergeArgs cv;
  auto* cv_cmd =
      app.add_subcommand("converge", "Ground-state energy across a ladder of basis sizes");
  cv_cmd->add_option("--omega", cv.omega, "Basis frequency")->capture_default_str();
  cv_cmd->add_option("--k", cv.k, "Quadratic stiffness")->capture_default_str();
  cv_cmd->add_option("--lambda", cv.lambda, "Quartic coupling")->capture_default_str();
  cv_cmd->add_option("--sizes", cv.sizes, "Comma-separated basis sizes")
      ->delimiter(',')
      ->capture_default_str();

  OracleArgs oc;
  auto* oc_cmd = app.add_subcommand(
      "oracle", "Independent finite-difference spectrum on a hard-wall grid");
  oc_cmd->add_option("--half-width", oc.half_width,
                     "Box half-width (0 = choose automatically)")
      ->capture_default_str();
  oc_cmd->add_option("--points", oc.points, "Interior grid points")->capture_default_str();
  oc_cmd->add_option("--levels", oc.levels, "Number of levels")->capture_default_str();
  oc_cmd->add_option("--k", oc.k, "Quadratic stiffness")->capture_default_str();
  oc_cmd->add_option("--lambda", oc.lambda, "Quartic coupling")->capture_default_str();
  oc_cmd->add_option("--format", oc.format, "Output format")
      ->check(format_check)
      ->capture_default_str();
  oc_cmd->add_option("--output", oc.output, "Write to file instead of stdout");

  PlotArgs pl;
  auto* pl_cmd = app.add_subcommand("plot", "Level diagram over the quartic potential");
  pl_cmd->add_option("--levels", pl.levels, "Number of levels")->capture_default_str();
  pl_cmd->add_flag("--wkb", pl.with_wkb, "Overlay the semiclassical levels");
  pl_cmd->add_flag("--full-width", pl.full_width,
                   "Draw levels across the whole window instead of between turning points");
  pl_cmd->add_option("--output", pl.output, "Output SVG path")->capture_default_str();
  pl_cmd->add_option("--width", pl.width, "Canvas width in pixels")->capture_default_str();
  pl_cmd->add_option("--height", pl.height, "Canvas height in pixels")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quartic");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sp_cmd) {
      run_spectrum(sp, out);
    } else if (*wk_cmd) {
      run_wkb(wk, out);
    } else if (*sc_cmd) {
      run_scan_omega(sc, out);
    } else if (*cv_cmd) {
      run_converge(cv, out);
    } else if (*oc_cmd) {
      run_oracle(oc, out);
    } else if (*pl_cmd) {
      run_plot(pl, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace quartic::cli
