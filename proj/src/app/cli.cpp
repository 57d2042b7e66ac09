#include "pdm/app/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "pdm/app/commands.hpp"
#include "pdm/errors.hpp"

namespace pdm::app {
namespace {

struct Flags {
  std::string config;
  std::string model;
  double a = 0, b = 0, alpha = 0, beta = 0, kappa = 0, x_min = 0, x_max = 0, energy_shift = 0;
  int levels = 0, n = 0, samples = 0, points = 0;
  std::string format;
  std::string out;
  bool metadata = false;
};

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config, "JSON config file (flags override its values)");
  sub.add_option("--model", f.model, "exp-morse, rational-morse or pdm-coulomb");
  sub.add_option("--A", f.a, "Morse parameter A");
  sub.add_option("--B", f.b, "Morse parameter B");
  sub.add_option("--alpha", f.alpha, "ordering parameter alpha");
  sub.add_option("--beta", f.beta, "ordering parameter beta");
  sub.add_option("--kappa", f.kappa, "rational-mass kappa");
  sub.add_option("--levels", f.levels, "number of levels, starting at n = 0");
  sub.add_option("--n", f.n, "level for the wavefunction subcommand");
  sub.add_option("--samples", f.samples, "number of wavefunction samples");
  sub.add_option("--x-min", f.x_min, "lower end of the initial grid or sampling window");
  sub.add_option("--x-max", f.x_max, "upper end of the initial grid or sampling window");
  sub.add_option("--points", f.points, "grid points of the initial grid");
  sub.add_option("--energy-shift", f.energy_shift, "additive constant E in the radial potential");
  sub.add_option("--format", f.format, "csv or json");
  sub.add_option("--out", f.out, "output file (default: stdout)");
  sub.add_flag("--metadata", f.metadata, "add a metadata object with a timestamp to JSON output");
}

ConfigLayer layer_from_flags(const CLI::App& sub, const Flags& f) {
  ConfigLayer c;
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--model")) c.model = parse_model(f.model);
  if (given("--A")) c.a = f.a;
  if (given("--B")) c.b = f.b;
  if (given("--alpha")) c.alpha = f.alpha;
  if (given("--beta")) c.beta = f.beta;
  if (given("--kappa")) c.kappa = f.kappa;
  if (given("--levels")) {
    if (f.levels < 0) throw InvalidParameter("--levels must be non-negative");
    std::vector<int> levels;
    for (int i = 0; i < f.levels; ++i) levels.push_back(i);
    c.levels = levels;
  }
  if (given("--n")) c.n = f.n;
  if (given("--samples")) c.samples = f.samples;
  if (given("--x-min")) c.x_min = f.x_min;
  if (given("--x-max")) c.x_max = f.x_max;
  if (given("--points")) c.points = f.points;
  if (given("--energy-shift")) c.energy_shift = f.energy_shift;
  if (given("--format")) c.format = parse_format(f.format);
  if (given("--out")) c.out = f.out;
  return c;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <class Report>
std::string render(const Report& r, const RunConfig& cfg, bool metadata) {
  if (cfg.format == OutputFormat::csv) return to_csv(r);
  nlohmann::ordered_json j = r;
  if (metadata) j["metadata"] = {{"generated_at", utc_timestamp()}};
  return j.dump(2) + "\n";
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw InvalidParameter("cannot write output file '" + *cfg.out + "'");
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly solvable position-dependent-mass models with finite-difference cross-checks", "pdm"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form and numeric energies per level");
  CLI::App* wavefunction = app.add_subcommand("wavefunction", "normalized samples of a closed-form eigenfunction");
  CLI::App* verify = app.add_subcommand("verify", "run every check for a configuration");
  for (CLI::App* sub : {spectrum, wavefunction, verify}) add_common(*sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "pdm: " << e.what() << "\n";
    return exit_invalid_parameters;
  }

  CLI::App* sub = spectrum->parsed() ? spectrum : wavefunction->parsed() ? wavefunction : verify;
  try {
    ConfigLayer layer;
    if (sub->count("--config")) layer = load_config_file(flags.config);
    layer.overlay(layer_from_flags(*sub, flags));
    if (sub == verify && !layer.format) layer.format = OutputFormat::json;
    const RunConfig cfg = resolve(layer);
    if (flags.metadata && cfg.format == OutputFormat::csv) err << "pdm: --metadata applies to JSON output only\n";

    if (sub == spectrum) {
      const SpectrumReport r = run_spectrum(cfg);
      emit(render(r, cfg, flags.metadata), cfg, out);
      for (const SpectrumRow& row : r.rows) {
        if (!row.pass) err << "pdm: level " << row.n << " outside tolerance (|diff| = " << row.abs_diff << ")\n";
      }
      return r.pass ? exit_pass : exit_verification_failed;
    }
    if (sub == wavefunction) {
      emit(render(run_wavefunction(cfg), cfg, flags.metadata), cfg, out);
      return exit_pass;
    }
    const VerifyReport r = run_verify(cfg);
    emit(render(r, cfg, flags.metadata), cfg, out);
    for (const Check& c : r.checks) {
      if (!c.pass) err << "pdm: check " << c.name << " failed: " << format_double(c.value) << " > " << c.threshold << "\n";
    }
    err << "pdm: " << r.checks.size() << " checks, " << (r.pass ? "all passed" : "FAILED") << "\n";
    return r.pass ? exit_pass : exit_verification_failed;
  } catch (const std::exception& e) {
    err << "pdm: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace pdm::app
