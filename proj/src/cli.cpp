#include "dshell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dshell/errors.hpp"
#include "dshell/report.hpp"

namespace dshell {

namespace {

constexpr std::size_t kDefaultPoints = 2001;
constexpr double kWindowHalfWidths = 10.0;
constexpr double kWindowFloor = 1e-3;

struct GlobalOptions {
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double radius = 1.0;
  std::string units = "reduced";
  double mass = 0.5;
  double hbar = 1.0;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::string format = "csv";
  std::string output;
  std::string plot_script;
};

struct Window {
  double e_min = std::numeric_limits<double>::quiet_NaN();
  double e_max = std::numeric_limits<double>::quiet_NaN();
  std::size_t points = kDefaultPoints;
};

void add_window(CLI::App* cmd, Window& w) {
  cmd->add_option("--emin", w.e_min, "Lower end of the energy window");
  cmd->add_option("--emax", w.e_max, "Upper end of the energy window");
  cmd->add_option("--points", w.points, "Number of grid points")->capture_default_str();
}

// Parse "re,im" (or a bare real) into a complex coefficient.
cplx parse_complex(const std::string& text, const char* flag) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double re = 0.0;
  double im = 0.0;
  char sep = 0;
  if (!(in >> re)) raise(ErrorKind::InvalidInput, std::string(flag) + " expects re,im");
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) raise(ErrorKind::InvalidInput, std::string(flag) + " expects re,im");
  }
  in >> std::ws;
  if (!in.eof()) raise(ErrorKind::InvalidInput, std::string(flag) + " expects re,im");
  return {re, im};
}

class Runner {
public:
  explicit Runner(std::ostream& out) : out_(out) {}

  PotentialSpec spec() const {
    if (std::isnan(g_.lambda)) raise(ErrorKind::InvalidInput, "--lambda is required");
    PotentialSpec s;
    s.lambda = g_.lambda;
    s.radius = g_.radius;
    s.units = g_.units == "physical" ? UnitSystem::physical : UnitSystem::reduced;
    s.mass = g_.mass;
    s.hbar = g_.hbar;
    s.validate();
    return s;
  }

  QuadratureOptions quadrature() const {
    if (!(g_.rel_tol > 0.0) || !(g_.abs_tol > 0.0)) raise(ErrorKind::InvalidInput, "tolerances must be > 0");
    return {g_.rel_tol, g_.abs_tol, kDefaultExecution};
  }

  ReportMeta meta(const std::string& command, const PotentialSpec& s) const {
    return {command, s, g_.rel_tol, g_.abs_tol};
  }

  // Window in model units: explicit bounds are given in the output units.
  Window model_window(const PotentialSpec& s, const Window& w, double lo_default, double hi_default) const {
    if (w.points < 2) raise(ErrorKind::InvalidInput, "--points must be at least 2");
    const double es = s.energy_scale();
    Window m;
    m.points = w.points;
    m.e_min = std::isnan(w.e_min) ? lo_default : w.e_min / es;
    m.e_max = std::isnan(w.e_max) ? hi_default : w.e_max / es;
    if (!(m.e_min > 0.0) || !(m.e_max > m.e_min)) {
      raise(ErrorKind::InvalidInput, "energy window needs 0 < emin < emax");
    }
    return m;
  }

  void emit(const std::string& command, const PotentialSpec& s, const Table& table, bool as_curve) const {
    const OutputFormat format = g_.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!g_.plot_script.empty() && (g_.output.empty() || format != OutputFormat::csv)) {
      raise(ErrorKind::InvalidInput, "--emit-plot-script needs --output with --format csv");
    }
    if (g_.output.empty()) {
      write_table(out_, format, meta(command, s), table, as_curve);
    } else {
      std::ofstream file(g_.output, std::ios::binary);
      if (!file) raise(ErrorKind::InvalidInput, "cannot open " + g_.output + " for writing");
      write_table(file, format, meta(command, s), table, as_curve);
      if (!file) raise(ErrorKind::InvalidInput, "failed writing " + g_.output);
    }
    if (!g_.plot_script.empty()) {
      std::ofstream script(g_.plot_script, std::ios::binary);
      if (!script) raise(ErrorKind::InvalidInput, "cannot open " + g_.plot_script + " for writing");
      script << plot_script(g_.output, command + " lambda=" + format_number(s.lambda));
    }
  }

  GlobalOptions g_;

private:
  std::ostream& out_;
};

double window_lo(const Pole& p) { return std::max(p.e_r - kWindowHalfWidths * p.gamma_r, kWindowFloor); }
double window_hi(const Pole& p) { return p.e_r + kWindowHalfWidths * p.gamma_r; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resonances of the delta-shell potential"};
  app.name("dshell");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  Runner run(out);
  GlobalOptions& g = run.g_;
  app.add_option("--lambda", g.lambda, "Dimensionless strength 2mga/hbar^2");
  app.add_option("--radius", g.radius, "Shell radius a")->capture_default_str();
  app.add_option("--units", g.units, "reduced or physical")
      ->check(CLI::IsMember({"reduced", "physical"}))
      ->capture_default_str();
  app.add_option("--mass", g.mass, "Particle mass (physical units)")->capture_default_str();
  app.add_option("--hbar", g.hbar, "Reduced Planck constant (physical units)")->capture_default_str();
  app.add_option("--rel-tol", g.rel_tol, "Relative quadrature tolerance")->capture_default_str();
  app.add_option("--abs-tol", g.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output", g.output, "Write results to this file");
  app.add_option("--emit-plot-script", g.plot_script, "Also write a matplotlib script for the CSV output");

  std::function<void()> action;

  // poles
  auto* poles = app.add_subcommand("poles", "List S-matrix poles");
  int pole_count = 8;
  bool with_anti = false;
  poles->add_option("--count", pole_count, "Number of resonances")->capture_default_str();
  poles->add_flag("--include-antiresonances", with_anti, "Also list the mirrored third-quadrant poles");
  poles->callback([&] {
    action = [&] {
      if (pole_count < 0) raise(ErrorKind::InvalidInput, "--count must be >= 0");
      const PotentialSpec s = run.spec();
      std::vector<Pole> list = enumerate_poles(s, pole_count);
      if (with_anti) {
        for (int n = 1; n <= pole_count; ++n) list.push_back(find_anti_resonance(s, n));
      }
      run.emit("poles", s, poles_table(s, list), false);
    };
  });

  // table
  auto* table = app.add_subcommand("table", "Resonance table with decay widths and constants");
  int table_count = 8;
  table->add_option("--count", table_count, "Number of resonances")->capture_default_str();
  table->callback([&] {
    action = [&] {
      if (table_count < 0) raise(ErrorKind::InvalidInput, "--count must be >= 0");
      const PotentialSpec s = run.spec();
      run.emit("table", s, observables_table(s, compute_table(s, table_count, run.quadrature())), false);
    };
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Decay energy spectrum of one pole");
  int spectrum_index = 0;
  bool spectrum_virtual = false;
  bool companions = false;
  Window spectrum_window;
  auto* idx_opt = spectrum->add_option("--index", spectrum_index, "Resonance index n >= 1");
  auto* virt_opt = spectrum->add_flag("--virtual", spectrum_virtual, "Use the virtual state");
  idx_opt->excludes(virt_opt);
  spectrum->add_flag("--companions", companions, "Add Breit-Wigner and |<E|V|z>|^2 columns");
  add_window(spectrum, spectrum_window);
  spectrum->callback([&] {
    action = [&] {
      const PotentialSpec s = run.spec();
      if (!spectrum_virtual && spectrum_index < 1) raise(ErrorKind::InvalidInput, "give --index n >= 1 or --virtual");
      const Pole p = spectrum_virtual ? find_virtual_state(s) : find_resonance(s, spectrum_index);
      const Window w = spectrum_virtual ? run.model_window(s, spectrum_window, 0.001, 2.0)
                                        : run.model_window(s, spectrum_window, window_lo(p), window_hi(p));
      const SpectrumCurve c = spectrum_curve(s, p, w.e_min, w.e_max, w.points, run.quadrature());
      run.emit("spectrum", s, spectrum_table(s, c, companions, !p.has_width()), true);
    };
  });

  // interfere
  auto* interfere = app.add_subcommand("interfere", "Decay spectrum of two interfering resonances");
  std::vector<int> indices;
  std::string c1_text = "0.7071067811865476,0";
  std::string c2_text = "0.7071067811865476,0";
  bool no_renormalize = false;
  Window interfere_window;
  interfere->add_option("--indices", indices, "Two resonance indices, e.g. 1,2")->delimiter(',')->required();
  interfere->add_option("--c1", c1_text, "Weight of the first resonance, re,im");
  interfere->add_option("--c2", c2_text, "Weight of the second resonance, re,im");
  interfere->add_flag("--no-renormalize", no_renormalize, "Do not divide by the integral over E");
  add_window(interfere, interfere_window);
  interfere->callback([&] {
    action = [&] {
      if (indices.size() != 2) raise(ErrorKind::InvalidInput, "--indices needs exactly two values");
      const PotentialSpec s = run.spec();
      const Pole p1 = find_resonance(s, indices[0]);
      const Pole p2 = find_resonance(s, indices[1]);
      InterferenceConfig cfg;
      cfg.c1 = parse_complex(c1_text, "--c1");
      cfg.c2 = parse_complex(c2_text, "--c2");
      cfg.renormalize = !no_renormalize;
      const Window w = run.model_window(s, interfere_window, std::min(window_lo(p1), window_lo(p2)),
                                        std::max(window_hi(p1), window_hi(p2)));
      const InterferenceCurve c = interference_curve(s, p1, p2, cfg, w.e_min, w.e_max, w.points, run.quadrature());
      run.emit("interfere", s, interference_table(s, c), true);
    };
  });

  // cross-section
  auto* cross = app.add_subcommand("cross-section", "Exact cross section and its pole approximants");
  int cross_index = 1;
  int second_index = 0;
  Window cross_window;
  cross->add_option("--index", cross_index, "Resonance index n >= 1")->capture_default_str();
  auto* second_opt = cross->add_option("--second-index", second_index, "Add the two-pole form with this resonance");
  add_window(cross, cross_window);
  cross->callback([&] {
    action = [&] {
      const PotentialSpec s = run.spec();
      const Pole p = find_resonance(s, cross_index);
      std::optional<Pole> q;
      if (second_opt->count() > 0) q = find_resonance(s, second_index);
      const Window w = run.model_window(s, cross_window, window_lo(p), window_hi(p));
      const CrossSectionBundle b = cross_section_bundle(s, p, uniform_grid(w.e_min, w.e_max, w.points), q);
      run.emit("cross-section", s, cross_section_table(s, b), true);
    };
  });

  // lambertw
  auto* lw = app.add_subcommand("lambertw", "Evaluate one branch of the Lambert W function");
  int branch = 0;
  double re = 0.0;
  double im = 0.0;
  lw->add_option("--branch", branch, "Branch index")->capture_default_str();
  lw->add_option("--re", re, "Real part of z")->required();
  lw->add_option("--im", im, "Imaginary part of z")->capture_default_str();
  lw->callback([&] {
    action = [&] {
      const cplx z(re, im);
      const cplx w = lambert_w(branch, z);
      Table t;
      t.columns = {"branch", "re_z", "im_z", "re_w", "im_w", "residual"};
      t.rows.push_back({static_cast<long long>(branch), re, im, w.real(), w.imag(), lambert_w_residual(w, z)});
      PotentialSpec s;
      s.lambda = std::isnan(g.lambda) ? 0.0 : g.lambda;
      run.emit("lambertw", s, t, false);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "dshell: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_input_error() ? kExitInvalidInput : kExitNumericalFailure;
  } catch (const std::exception& e) {
    err << "dshell: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitOk;
}

}  // namespace dshell
