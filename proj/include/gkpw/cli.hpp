// cli.hpp
// Command-line front end (gkpw). Kept in a header so the commands can be
// driven in-process from tests; tools/gkpw.cpp only forwards main().
//
// Exit codes: 0 success, 2 argument error, 3 numeric-domain error.

#pragma once

#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "gkpw/analysis.hpp"
#include "gkpw/bloch.hpp"
#include "gkpw/io.hpp"
#include "gkpw/lattice.hpp"
#include "gkpw/squeezed.hpp"

namespace gkpw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct RunConfig {
  std::string command;
  std::optional<std::string> state;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<double> sigma;
  std::optional<double> kappa;
  std::optional<std::string> grid;   // NxM
  std::optional<std::string> range;  // A:B
  std::optional<std::string> origin; // Q:P, cell origin for finite squeezing
  std::optional<std::string> out;    // output prefix
  std::vector<std::string> formats;  // csv | json | pgm
  std::string word;
  std::string measure = "sqrtpi-abs";
  bool equator = false;
  bool full_plane = false;
};

namespace detail {

inline BlochAngles resolve_state(const RunConfig& cfg) {
  if (cfg.state && (cfg.theta || cfg.phi)) {
    throw std::invalid_argument("--state and --theta/--phi are mutually exclusive");
  }
  if (cfg.state) return named_state(*cfg.state).angles;
  if (cfg.theta || cfg.phi) return BlochAngles{cfg.theta.value_or(0.0), cfg.phi.value_or(0.0)};
  throw std::invalid_argument("a state is required: --state LABEL or --theta/--phi");
}

inline std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw std::invalid_argument("--grid expects NxM, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, x), b = text.substr(x + 1);
    const long n = std::stol(a, &used_a), m = std::stol(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || n <= 0 || m <= 0) throw std::invalid_argument("");
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
  } catch (const std::exception&) {
    throw std::invalid_argument("--grid expects positive NxM, got '" + text + "'");
  }
}

inline std::pair<double, double> parse_range(const std::string& text) {
  const auto c = text.find(':');
  if (c == std::string::npos) throw std::invalid_argument("--range expects A:B, got '" + text + "'");
  try {
    std::size_t ua = 0, ub = 0;
    const std::string a = text.substr(0, c), b = text.substr(c + 1);
    const double lo = std::stod(a, &ua), hi = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size()) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--range expects numeric A:B, got '" + text + "'");
  }
}

// Output routing. With --out PREFIX every selected format goes to
// PREFIX.<ext> and the JSON summary is echoed to stdout; without --out a
// single text format is printed to stdout.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::set<std::string> supported, std::set<std::string> defaults_with_out,
       std::string default_stdout, std::ostream& out)
      : cfg_(cfg), out_(out) {
    for (const auto& f : cfg.formats) {
      if (!supported.count(f)) throw std::invalid_argument("format '" + f + "' not supported by " + cfg.command);
      selected_.insert(f);
    }
    if (cfg.out) {
      if (selected_.empty()) selected_ = std::move(defaults_with_out);
    } else {
      if (selected_.empty()) selected_.insert(default_stdout);
      if (selected_.size() != 1) throw std::invalid_argument("several formats need --out PREFIX");
      if (selected_.count("pgm")) throw std::invalid_argument("pgm output needs --out PREFIX");
    }
  }

  bool wants(const std::string& fmt) const { return selected_.count(fmt) > 0; }

  void emit(const std::string& fmt, const std::string& bytes) {
    if (!wants(fmt)) return;
    if (cfg_.out) {
      io::write_file(*cfg_.out + "." + fmt, bytes);
    } else {
      out_ << bytes;
    }
  }

  void summary(const io::json& j) {
    if (cfg_.out) out_ << io::dump(j);
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::set<std::string> selected_;
};

inline SqueezedGkpParams resolve_params(const RunConfig& cfg) {
  const double sigma = cfg.sigma.value_or(0.2);
  return SqueezedGkpParams{sigma, cfg.kappa.value_or(sigma)};
}

inline io::json state_json(const BlochAngles& s) {
  io::json j{{"theta", s.theta()}, {"phi", s.phi()}};
  if (auto lab = match_catalog(s)) j["label"] = std::string(label_name(*lab));
  return j;
}

}  // namespace detail

inline int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const auto s = detail::resolve_state(cfg);
  detail::Sink sink(cfg, {"csv", "json"}, {"csv", "json"}, "json", out);
  const auto c = cell_coefficients(s);
  io::json j = io::to_json(cell_report(s));
  j["coefficients"] = io::to_json(c);
  j["negative_sites"] = c.count_negative();
  j["nonzero_sites"] = c.count_nonzero();
  sink.emit("csv", io::coefficients_csv(c));
  sink.emit("json", io::dump(j));
  sink.summary(j);
  return kExitOk;
}

inline int cmd_cell(const RunConfig& cfg, std::ostream& out) {
  const auto s = detail::resolve_state(cfg);
  detail::Sink sink(cfg, {"csv", "json"}, {"csv", "json"}, "json", out);
  const auto rep = cell_report(s);
  io::json j = io::to_json(rep);
  if (cfg.sigma || cfg.kappa) {
    const SqueezedGkpState st{detail::resolve_params(cfg), s};
    CellOrigin origin;
    if (cfg.origin) std::tie(origin.q, origin.p) = detail::parse_range(*cfg.origin);
    const auto ci = cell_integrals(st, origin);
    if (std::abs(ci.signed_integral) < 1e-9) {
      throw NumericDomainError("negativity ratio undefined: cell integral of W is ~0");
    }
    j["squeezed"] = io::json{{"sigma", st.params().sigma()},
                             {"kappa", st.params().kappa()},
                             {"origin", {origin.q, origin.p}},
                             {"cell_signed_integral", ci.signed_integral},
                             {"cell_abs_integral", ci.abs_integral},
                             {"ratio", ci.abs_integral / ci.signed_integral},
                             {"ideal_ratio", ideal_negativity_ratio(s)}};
  }
  sink.emit("csv", io::report_csv(rep));
  sink.emit("json", io::dump(j));
  sink.summary(j);
  return kExitOk;
}

inline int cmd_wigner_grid(const RunConfig& cfg, std::ostream& out) {
  const auto s = detail::resolve_state(cfg);
  const auto prm = detail::resolve_params(cfg);
  detail::Sink sink(cfg, {"csv", "json", "pgm"}, {"csv", "json", "pgm"}, "json", out);
  const SqueezedGkpState st{prm, s};

  GridSpec spec = cfg.full_plane ? default_full_plane_grid(prm) : default_figure_grid(prm);
  if (cfg.range) {
    const auto [lo, hi] = detail::parse_range(*cfg.range);
    spec.q.min = spec.p.min = lo;
    spec.q.max = spec.p.max = hi;
  }
  if (cfg.grid) {
    const auto [n, m] = detail::parse_grid(*cfg.grid);
    spec.q.count = n;
    spec.p.count = m;
  }
  const auto grid = wigner_grid(st, spec);
  // The window usually clips the envelope; normalization is checked on a
  // separate grid covering the whole support.
  const auto full_spec = default_full_plane_grid(prm);
  const double full_integral = cfg.full_plane && !cfg.range && !cfg.grid
                                   ? grid.integral()
                                   : wigner_grid(st, full_spec).integral();
  const double max_abs = grid.max_abs();

  io::json j{{"state", detail::state_json(s)},
             {"sigma", prm.sigma()},
             {"kappa", prm.kappa()},
             {"s_max", prm.s_max()},
             {"overlap_01", st.logical_overlap()},
             {"grid",
              {{"q_min", spec.q.min},
               {"q_max", spec.q.max},
               {"q_count", spec.q.count},
               {"p_min", spec.p.min},
               {"p_max", spec.p.max},
               {"p_count", spec.p.count}}},
             {"window_integral", grid.integral()},
             {"window_abs_integral", grid.integral(true)},
             {"full_plane_integral", full_integral},
             {"max_abs_w", max_abs},
             {"within_pure_state_bound", max_abs <= 1.0 / kPi + 1e-9},
             {"peak_sites_per_cell", count_peak_sites(st, max_abs)},
             {"pgm_map", "byte = round(127.5*(1+W/max_abs_w)); columns q ascending, rows p descending"}};
  sink.emit("csv", io::grid_csv(grid));
  sink.emit("pgm", io::pgm_bytes(io::wigner_heatmap(grid)));
  sink.emit("json", io::dump(j));
  sink.summary(j);
  return kExitOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  SweepSpec spec;
  if (cfg.grid) {
    const auto [n, m] = detail::parse_grid(*cfg.grid);
    spec.n_theta = n;
    spec.n_phi = m;
  }
  if (cfg.measure == "sqrtpi-abs") {
    spec.measure = SweepMeasure::kSqrtPiAbsCell;
  } else if (cfg.measure == "wln") {
    spec.measure = SweepMeasure::kWlnCell;
  } else {
    throw std::invalid_argument("--measure must be sqrtpi-abs or wln");
  }
  detail::Sink sink(cfg, {"csv", "json", "pgm"}, {"csv", "json"}, "json", out);
  const auto surf = sweep(spec);
  const auto rep = find_extrema(surf);
  io::json j;
  j["grid"] = io::json{{"n_theta", spec.n_theta}, {"n_phi", spec.n_phi}, {"measure", cfg.measure}};
  if (cfg.equator) {
    if (rep.equatorial_maxima.empty()) throw std::invalid_argument("--equator needs an odd n_theta");
    j["equatorial_max"] = rep.equatorial_max;
    j["equatorial_maxima"] = io::clusters_json(rep.equatorial_maxima);
  } else {
    const io::json extrema = io::to_json(rep);
    for (const auto& [k, v] : extrema.items()) j[k] = v;
  }
  sink.emit("csv", io::surface_csv(surf));
  sink.emit("pgm", io::pgm_bytes(io::surface_heatmap(surf)));
  sink.emit("json", io::dump(j));
  sink.summary(j);
  return kExitOk;
}

inline int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  detail::Sink sink(cfg, {"csv", "json"}, {"csv", "json"}, "csv", out);
  const auto rows = table1_report();
  const io::json j = io::to_json(rows);
  sink.emit("csv", io::table1_csv(rows));
  sink.emit("json", io::dump(j));
  sink.summary(j);
  return kExitOk;
}

inline int cmd_gate(const RunConfig& cfg, std::ostream& out) {
  const auto s0 = detail::resolve_state(cfg);
  detail::Sink sink(cfg, {"csv", "json"}, {"csv", "json"}, "json", out);
  BlochAngles s = s0;
  LatticeCoefficients field = cell_coefficients(s0);
  double worst = 0.0;
  for (char ch : cfg.word) {
    CliffordGate g;
    if (ch == 'F') {
      g = CliffordGate::kHadamard;
    } else if (ch == 'P') {
      g = CliffordGate::kPhasePi2;
    } else {
      throw std::invalid_argument(std::string("unknown gate symbol '") + ch + "' (use F or P)");
    }
    s = apply_gate_bloch(s, g);
    field = apply_symplectic_lattice(field, symplectic_for(g));
    worst = std::max(worst, cell_coefficients(s).max_abs_diff(field));
  }
  std::optional<StateLabel> pattern;
  for (StateLabel lab : kStabilizerLabels) {
    if (cell_coefficients(named_state(lab).angles).approx_equal(field)) pattern = lab;
  }
  io::json j{{"initial", detail::state_json(s0)},
             {"word", cfg.word},
             {"final", detail::state_json(s)},
             {"lattice_state", detail::state_json(field.source())},
             {"square_ok", worst <= kFieldTolerance},
             {"max_abs_diff", worst},
             {"stabilizer_pattern", pattern.has_value()},
             {"coefficients", io::to_json(field)}};
  if (pattern) j["stabilizer_label"] = std::string(label_name(*pattern));
  sink.emit("csv", io::coefficients_csv(field));
  sink.emit("json", io::dump(j));
  sink.summary(j);
  return kExitOk;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "coeffs") return cmd_coeffs(cfg, out);
  if (cfg.command == "cell") return cmd_cell(cfg, out);
  if (cfg.command == "wigner-grid") return cmd_wigner_grid(cfg, out);
  if (cfg.command == "sweep") return cmd_sweep(cfg, out);
  if (cfg.command == "table1") return cmd_table1(cfg, out);
  if (cfg.command == "gate") return cmd_gate(cfg, out);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"GKP qubit Wigner functions and cell negativity"};
  app.name("gkpw");
  app.require_subcommand(1);

  auto add_state = [&](CLI::App* sub) {
    auto* st = sub->add_option("--state", cfg.state, "Catalog state: ZERO ONE PLUS MINUS PLUS_I MINUS_I H_MAGIC T_MAGIC");
    auto* th = sub->add_option("--theta", cfg.theta, "Polar Bloch angle (radians)");
    auto* ph = sub->add_option("--phi", cfg.phi, "Azimuthal Bloch angle (radians)");
    st->excludes(th)->excludes(ph);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output prefix; files are written as PREFIX.<format>");
    sub->add_option("--format", cfg.formats, "csv, json or pgm (repeatable, comma separated)")->delimiter(',');
  };
  auto add_squeezing = [&](CLI::App* sub) {
    sub->add_option("--sigma", cfg.sigma, "Peak width (default 0.2)");
    sub->add_option("--kappa", cfg.kappa, "Inverse envelope width (default: sigma)");
  };

  auto* coeffs = app.add_subcommand("coeffs", "Unit-cell coefficient table and cell report");
  add_state(coeffs);
  add_output(coeffs);

  auto* cell = app.add_subcommand("cell", "Cell negativity report (ideal; finite squeezing with --sigma)");
  add_state(cell);
  add_squeezing(cell);
  cell->add_option("--origin", cfg.origin, "Cell origin Q:P for the squeezed ratio (default -sqrt(pi)/4 on both)");
  add_output(cell);

  auto* wg = app.add_subcommand("wigner-grid", "Sample the finitely squeezed Wigner function");
  add_state(wg);
  add_squeezing(wg);
  wg->add_option("--grid", cfg.grid, "Samples NxM along q and p (default 241x241)");
  wg->add_option("--range", cfg.range, "Window A:B on both axes");
  wg->add_flag("--full-plane", cfg.full_plane, "Use a window covering the whole envelope");
  add_output(wg);

  auto* sw = app.add_subcommand("sweep", "Bloch-sphere sweep of the cell negativity");
  sw->add_option("--grid", cfg.grid, "n_theta x n_phi (default 91x180)");
  sw->add_option("--measure", cfg.measure, "sqrtpi-abs (default) or wln");
  sw->add_flag("--equator", cfg.equator, "Report only maxima on the theta = pi/2 row");
  add_output(sw);

  auto* t1 = app.add_subcommand("table1", "Cell absolute integrals of stabilizer and magic states");
  add_output(t1);

  auto* gate = app.add_subcommand("gate", "Apply a word over {F, P} on the Bloch sphere and the lattice");
  add_state(gate);
  gate->add_option("--word", cfg.word, "Gate word, applied left to right")->required();
  add_output(gate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gkpw: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    return dispatch(cfg, out);
  } catch (const NumericDomainError& e) {
    err << "gkpw: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "gkpw: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gkpw: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gkpw::cli
