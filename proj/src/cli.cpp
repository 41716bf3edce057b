#include "cheshire/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <vector>

#include "cheshire/analysis.hpp"
#include "cheshire/config.hpp"
#include "cheshire/weak.hpp"

namespace cheshire {

namespace {

// Display cleanup: values this close to zero are floating-point residue of
// exact cancellations and print as 0.
std::string format_display(double x, int digits = 12) {
  if (std::abs(x) < 1e-14) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        out << r[c];
        if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct GlobalOptions {
  std::string config;
  std::string csv;
  std::optional<double> scale_ref_cps;
};

/// Flag name -> config key; the flags mirror the config file keys.
const std::vector<std::pair<std::string, std::string>> kScenarioFlags = {
    {"--insertion", "insertion"},   {"--path", "path"},
    {"--alpha-deg", "alpha_deg"},   {"--alpha-rad", "alpha_rad"},
    {"--transmissivity", "transmissivity"}, {"--chi-deg", "chi_deg"},
    {"--chi-rad", "chi_rad"},       {"--truncation", "truncation"},
};

struct ScenarioFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

void add_scenario_flags(CLI::App* sub, ScenarioFlags& f) {
  for (const auto& [flag, key] : kScenarioFlags) {
    f.options[key] = sub->add_option(flag, f.values[key], "scenario setting '" + key + "'");
  }
  f.options["alpha_deg"]->excludes(f.options["alpha_rad"]);
  f.options["chi_deg"]->excludes(f.options["chi_rad"]);
}

ScenarioConfig build_config(const GlobalOptions& g, const ScenarioFlags& f) {
  ScenarioConfig cfg = g.config.empty() ? ScenarioConfig{} : load_config(g.config);
  for (const auto& [flag, key] : kScenarioFlags) {
    if (f.options.at(key)->count() > 0) apply_setting(cfg, key, f.values.at(key));
  }
  if (g.scale_ref_cps) {
    if (*g.scale_ref_cps < 0.0 || !std::isfinite(*g.scale_ref_cps))
      throw ConfigError("--scale-ref-cps must be finite and nonnegative");
    cfg.scale_ref_cps = *g.scale_ref_cps;
  }
  return cfg;
}

std::string describe(const Scenario& sc) {
  std::string s;
  std::visit(
      [&](const auto& ins) {
        using T = std::decay_t<decltype(ins)>;
        if constexpr (std::is_same_v<T, NoInsertion>) {
          s = "insertion=none";
        } else if constexpr (std::is_same_v<T, AbsorberInsertion>) {
          s = std::string("insertion=absorber path=") + to_string(ins.path) +
              " transmissivity=" + format_display(ins.transmissivity.value());
        } else {
          s = std::string("insertion=magnet path=") + to_string(ins.path) +
              " alpha_rad=" + format_display(ins.alpha.radians()) + " (" +
              format_display(ins.alpha.degrees()) + " deg) truncation=" + to_string(ins.truncation);
        }
      },
      sc.insertion);
  return s + " chi_rad=" + format_display(sc.chi);
}

/// Throws std::runtime_error if the file cannot be opened or written.
void write_csv_file(const std::string& path, std::span<const RunResult> results) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(f, results);
  f.flush();
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_run(const GlobalOptions& g, const ScenarioFlags& f, std::ostream& out) {
  const ScenarioConfig cfg = build_config(g, f);
  const RunResult r = run(to_scenario(cfg), cfg.scale_ref_cps);
  out << "scenario: " << describe(r.scenario) << '\n';
  out << "scale: I_ref = " << format_display(kReferenceIntensity) << " -> "
      << format_display(cfg.scale_ref_cps) << " cps\n";
  Table t({"detector", "intensity_norm", "intensity_cps"});
  for (Detector d : kAllDetectors)
    t.add({to_string(d), format_display(r.norm(d)), format_display(r.at(d).intensity_cps)});
  t.print(out);
  if (!g.csv.empty()) write_csv_file(g.csv, std::span(&r, 1));
  return kExitOk;
}

struct SweepOptions {
  std::string vary;
  std::optional<double> start, end;
  std::optional<std::size_t> points;
  std::string spacing;
};

int cmd_sweep(const GlobalOptions& g, const ScenarioFlags& f, const SweepOptions& s,
              std::ostream& out) {
  const ScenarioConfig cfg = build_config(g, f);
  const Scenario tmpl = to_scenario(cfg);
  const bool vary_chi = s.vary == "chi";

  // Defaults: 361 points over [0, 2 pi] for chi, 50 log-spaced over
  // [0.01, 0.3] rad for alpha.
  const double start = s.start.value_or(vary_chi ? 0.0 : 0.01);
  const double end = s.end.value_or(vary_chi ? 2.0 * std::numbers::pi : 0.3);
  const std::size_t points = s.points.value_or(vary_chi ? 361 : 50);
  const std::string spacing = s.spacing.empty() ? (vary_chi ? "lin" : "log") : s.spacing;

  if (!(start < end)) throw ConfigError("sweep grid needs start < end");
  if (points < 2) throw ConfigError("sweep grid needs at least 2 points");
  if (spacing == "log" && !(start > 0.0)) throw ConfigError("log spacing needs start > 0");
  const std::vector<double> grid =
      spacing == "log" ? logspace(start, end, points) : linspace(start, end, points);

  if (!vary_chi && !std::holds_alternative<MagnetInsertion>(tmpl.insertion))
    throw ConfigError("--vary alpha needs --insertion magnet");

  const std::vector<RunResult> results = vary_chi ? sweep_chi(tmpl, grid, cfg.scale_ref_cps)
                                                  : sweep_alpha(tmpl, grid, cfg.scale_ref_cps);
  if (g.csv.empty()) {
    write_csv(out, results);
  } else {
    write_csv_file(g.csv, results);
    out << "wrote " << results.size() * kAllDetectors.size() << " rows to " << g.csv << '\n';
  }
  return kExitOk;
}

int cmd_weakvalues(std::ostream& out) {
  const JointState psi_i = initial_state();
  const JointState psi_f = postselection_state();
  const WeakValueSet wv = weak_values(psi_i, psi_f);
  out << "pre/post-selection overlap <psi_f|psi_i> = " << format_display(inner(psi_f, psi_i).real())
      << ", I_ref = |<psi_f|psi_i>|^2 = " << format_display(std::norm(inner(psi_f, psi_i)))
      << '\n';
  Table t({"weak_value", "re", "im", "abs"});
  const std::pair<const char*, Complex> entries[] = {{"pi_I", wv.pi_I},
                                                     {"pi_II", wv.pi_II},
                                                     {"sigma_pi_I", wv.sigma_pi_I},
                                                     {"sigma_pi_II", wv.sigma_pi_II}};
  for (const auto& [name, w] : entries)
    t.add({name, format_display(w.real()), format_display(w.imag()), format_display(std::abs(w))});
  t.print(out);
  out << '\n';
  Table p({"projective", "<sigma_z>"});
  p.add({"path_I", format_display(projective_spin_expectation(Path::I))});
  p.add({"path_II", format_display(projective_spin_expectation(Path::II))});
  p.print(out);
  return kExitOk;
}

int cmd_reproduce(double theory_bias_cps, std::ostream& out) {
  TheoryModel model;
  if (theory_bias_cps != 0.0) {
    const double bias_norm = theory_bias_cps * kReferenceIntensity / kReferenceCps;
    model = [bias_norm](const Scenario& sc) { return run(sc).norm(Detector::OSelected) + bias_norm; };
  }
  const auto rows = reproduce_paper_table(model);
  out << "alpha = " << format_display(kExperimentAlphaDeg) << " deg, chi = 0, agreement within "
      << format_display(kAgreementSigmas) << " combined sigma\n";
  Table t({"quantity", "theory_norm", "theory_cps", "theory_sigma", "measured_cps",
           "measured_sigma", "agrees"});
  for (const auto& r : rows)
    t.add({r.quantity, format_display(r.theory_norm), format_display(r.theory_cps, 6),
           format_display(r.theory_sigma_cps, 3), format_display(r.measured_cps),
           format_display(r.measured_sigma_cps), r.agrees ? "yes" : "NO"});
  t.print(out);
  return all_agree(rows) ? kExitOk : kExitDisagree;
}

struct AnalyzeOptions {
  std::string path = "II";
  double start = 0.01;
  double end = 0.3;
  std::size_t points = 50;
};

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& a, std::ostream& out) {
  const Path path = parse_path(a.path);
  if (!(a.start > 0.0 && a.start < a.end)) throw ConfigError("analyze grid needs 0 < start < end");
  if (a.points < 10) throw ConfigError("analyze grid needs at least 10 points");
  const std::vector<double> grid = logspace(a.start, a.end, a.points);
  const TruncationReport rep = truncation_scan(path, grid);
  const double ref = kReferenceIntensity;

  out << "truncation scan: magnet on path " << to_string(path) << ", chi = 0, I_ref = "
      << format_display(ref) << '\n';
  Table t({"alpha_rad", "I_exact", "I_linear", "I_quadratic", "deficit_exact", "deficit_linear",
           "deficit_quadratic"});
  for (std::size_t k = 0; k < rep.alpha.size(); ++k)
    t.add({format_display(rep.alpha[k]), format_display(rep.i_exact[k]),
           format_display(rep.i_linear[k]), format_display(rep.i_quadratic[k]),
           format_display(ref - rep.i_exact[k]), format_display(ref - rep.i_linear[k]),
           format_display(ref - rep.i_quadratic[k])});
  t.print(out);
  out << "error exponent |I_linear - I_exact|: " << format_display(rep.linear_error_exponent, 6)
      << '\n';
  out << "error exponent |I_quadratic - I_exact|: "
      << format_display(rep.quadratic_error_exponent, 6) << '\n';

  if (!g.csv.empty()) {
    std::ofstream f(g.csv, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + g.csv + "' for writing");
    f << "alpha_rad,I_exact,I_linear,I_quadratic\n";
    for (std::size_t k = 0; k < rep.alpha.size(); ++k)
      f << format_csv_number(rep.alpha[k]) << ',' << format_csv_number(rep.i_exact[k]) << ','
        << format_csv_number(rep.i_linear[k]) << ',' << format_csv_number(rep.i_quadratic[k])
        << '\n';
    if (!f) throw std::runtime_error("failed writing '" + g.csv + "'");
  }
  return kExitOk;
}

}  // namespace

std::string format_csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void write_csv(std::ostream& out, std::span<const RunResult> results) {
  out << "scenario_id,detector,chi_rad,alpha_rad,truncation,intensity_norm,intensity_cps\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const RunResult& r = results[i];
    double alpha = 0.0;
    std::string trunc = "none";
    if (const auto* m = std::get_if<MagnetInsertion>(&r.scenario.insertion)) {
      alpha = m->alpha.radians();
      trunc = to_string(m->truncation);
    }
    for (Detector d : kAllDetectors) {
      out << i << ',' << to_string(d) << ',' << format_csv_number(r.scenario.chi) << ','
          << format_csv_number(alpha) << ',' << trunc << ',' << format_csv_number(r.norm(d)) << ','
          << format_csv_number(r.at(d).intensity_cps) << '\n';
    }
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neutron-interferometer weak-value simulator"};
  app.name("cheshire");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config, "scenario config file (key = value)");
  app.add_option("--csv", g.csv, "write CSV output to this path");
  app.add_option("--scale-ref-cps", g.scale_ref_cps, "counts per second at I_ref (default 11.25)");

  auto* run_cmd = app.add_subcommand("run", "intensities at O and H for one scenario");
  ScenarioFlags run_flags;
  add_scenario_flags(run_cmd, run_flags);

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep chi or alpha, emit CSV");
  ScenarioFlags sweep_flags;
  add_scenario_flags(sweep_cmd, sweep_flags);
  SweepOptions sweep_opts;
  sweep_cmd->add_option("--vary", sweep_opts.vary, "parameter to sweep")
      ->required()
      ->check(CLI::IsMember({"chi", "alpha"}));
  sweep_cmd->add_option("--start", sweep_opts.start, "grid start (rad)");
  sweep_cmd->add_option("--end", sweep_opts.end, "grid end (rad)");
  sweep_cmd->add_option("--points", sweep_opts.points, "grid points");
  sweep_cmd->add_option("--spacing", sweep_opts.spacing, "lin or log")
      ->check(CLI::IsMember({"lin", "log"}));

  auto* wv_cmd = app.add_subcommand("weakvalues", "weak values and projective <sigma_z>");

  auto* repro_cmd = app.add_subcommand("reproduce", "theory vs measured intensities");
  double theory_bias_cps = 0.0;
  // Negative control for the agreement gate; hidden from --help.
  repro_cmd->add_option("--theory-bias-cps", theory_bias_cps)->group("");

  auto* analyze_cmd = app.add_subcommand("analyze", "truncation-order analysis");
  AnalyzeOptions analyze_opts;
  analyze_cmd->add_option("--path", analyze_opts.path, "I or II");
  analyze_cmd->add_option("--start", analyze_opts.start, "smallest alpha (rad)");
  analyze_cmd->add_option("--end", analyze_opts.end, "largest alpha (rad)");
  analyze_cmd->add_option("--points", analyze_opts.points, "log-spaced grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(g, run_flags, out);
    if (sweep_cmd->parsed()) return cmd_sweep(g, sweep_flags, sweep_opts, out);
    if (wv_cmd->parsed()) return cmd_weakvalues(out);
    if (repro_cmd->parsed()) return cmd_reproduce(theory_bias_cps, out);
    if (analyze_cmd->parsed()) return cmd_analyze(g, analyze_opts, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cheshire
