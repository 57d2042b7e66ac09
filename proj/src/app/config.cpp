#include "pdm/app/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pdm/errors.hpp"

namespace pdm::app {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw InvalidParameter("config: " + what); }

double real_field(const json& j, const std::string& key) {
  if (!j.is_number()) bad("'" + key + "' must be a number");
  return j.get<double>();
}

int int_field(const json& j, const std::string& key) {
  if (!j.is_number_integer()) bad("'" + key + "' must be an integer");
  return j.get<int>();
}

std::vector<double> real_list(const json& j, const std::string& key) {
  if (!j.is_array()) bad("'" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const json& v : j) out.push_back(real_field(v, key));
  return out;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) bad("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::exp_morse:
      return "exp-morse";
    case ModelKind::rational_morse:
      return "rational-morse";
    case ModelKind::pdm_coulomb:
      return "pdm-coulomb";
  }
  return "unknown";
}

ModelKind parse_model(std::string_view name) {
  if (name == "exp-morse") return ModelKind::exp_morse;
  if (name == "rational-morse") return ModelKind::rational_morse;
  if (name == "pdm-coulomb") return ModelKind::pdm_coulomb;
  throw InvalidParameter("unknown model '" + std::string(name) + "' (expected exp-morse, rational-morse or pdm-coulomb)");
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw InvalidParameter("unknown format '" + std::string(name) + "' (expected csv or json)");
}

bool GoldenValues::empty() const {
  return energy.empty() && v0.empty() && z_charge.empty() && l_quantum.empty() && lambda.empty() && !mu_ground &&
         !b_prime_squared;
}

void ConfigLayer::overlay(const ConfigLayer& o) {
  take(model, o.model);
  take(a, o.a);
  take(b, o.b);
  take(alpha, o.alpha);
  take(beta, o.beta);
  take(kappa, o.kappa);
  take(levels, o.levels);
  take(n, o.n);
  take(samples, o.samples);
  take(x_min, o.x_min);
  take(x_max, o.x_max);
  take(points, o.points);
  take(format, o.format);
  take(out, o.out);
  take(energy_shift, o.energy_shift);
  take(fault, o.fault);
  take(expected, o.expected);
}

ConfigLayer parse_config(const json& j) {
  reject_unknown(j,
                 {"model", "A", "B", "alpha", "beta", "kappa", "levels", "n", "samples", "x_min", "x_max", "points",
                  "format", "out", "energy_shift", "fault_injection", "expected"},
                 "config");
  ConfigLayer c;
  if (j.contains("model")) {
    if (!j["model"].is_string()) bad("'model' must be a string");
    c.model = parse_model(j["model"].get<std::string>());
  }
  if (j.contains("A")) c.a = real_field(j["A"], "A");
  if (j.contains("B")) c.b = real_field(j["B"], "B");
  if (j.contains("alpha")) c.alpha = real_field(j["alpha"], "alpha");
  if (j.contains("beta")) c.beta = real_field(j["beta"], "beta");
  if (j.contains("kappa")) c.kappa = real_field(j["kappa"], "kappa");
  if (j.contains("levels")) {
    const json& l = j["levels"];
    std::vector<int> levels;
    if (l.is_array()) {
      for (const json& v : l) levels.push_back(int_field(v, "levels"));
    } else {
      const int count = int_field(l, "levels");
      if (count < 0) bad("'levels' must be non-negative");
      for (int i = 0; i < count; ++i) levels.push_back(i);
    }
    c.levels = levels;
  }
  if (j.contains("n")) c.n = int_field(j["n"], "n");
  if (j.contains("samples")) c.samples = int_field(j["samples"], "samples");
  if (j.contains("x_min")) c.x_min = real_field(j["x_min"], "x_min");
  if (j.contains("x_max")) c.x_max = real_field(j["x_max"], "x_max");
  if (j.contains("points")) c.points = int_field(j["points"], "points");
  if (j.contains("format")) {
    if (!j["format"].is_string()) bad("'format' must be a string");
    c.format = parse_format(j["format"].get<std::string>());
  }
  if (j.contains("out")) {
    if (!j["out"].is_string()) bad("'out' must be a string");
    c.out = j["out"].get<std::string>();
  }
  if (j.contains("energy_shift")) c.energy_shift = real_field(j["energy_shift"], "energy_shift");
  if (j.contains("fault_injection")) {
    const json& f = j["fault_injection"];
    reject_unknown(f, {"parameter", "scale", "offset"}, "fault_injection");
    if (!f.contains("parameter") || !f["parameter"].is_string()) bad("fault_injection needs a 'parameter' string");
    FaultInjection fi;
    fi.parameter = f["parameter"].get<std::string>();
    static const std::set<std::string> names = {"A", "B", "alpha", "beta", "kappa"};
    if (!names.count(fi.parameter)) bad("fault_injection parameter '" + fi.parameter + "' is not a model parameter");
    if (f.contains("scale")) fi.scale = real_field(f["scale"], "scale");
    if (f.contains("offset")) fi.offset = real_field(f["offset"], "offset");
    c.fault = fi;
  }
  if (j.contains("expected")) {
    const json& e = j["expected"];
    reject_unknown(e, {"energy", "v0", "z_charge", "l", "lambda", "mu_ground", "b_prime_squared"}, "expected");
    GoldenValues g;
    if (e.contains("energy")) g.energy = real_list(e["energy"], "energy");
    if (e.contains("v0")) g.v0 = real_list(e["v0"], "v0");
    if (e.contains("z_charge")) g.z_charge = real_list(e["z_charge"], "z_charge");
    if (e.contains("l")) g.l_quantum = real_list(e["l"], "l");
    if (e.contains("lambda")) g.lambda = real_list(e["lambda"], "lambda");
    if (e.contains("mu_ground")) g.mu_ground = real_field(e["mu_ground"], "mu_ground");
    if (e.contains("b_prime_squared")) g.b_prime_squared = real_field(e["b_prime_squared"], "b_prime_squared");
    c.expected = g;
  }
  return c;
}

ConfigLayer load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read config file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidParameter("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

RunConfig resolve(const ConfigLayer& c) {
  RunConfig r;
  r.model = c.model.value_or(ModelKind::rational_morse);
  // Model defaults: the exponential-mass ladder of the constant-mass oracle,
  // and the kappa = 0.1 rational-mass configuration for the other two.
  const bool exp = r.model == ModelKind::exp_morse;
  r.a = c.a.value_or(exp ? 2.5 : 2.0);
  r.b = c.b.value_or(1.0);
  r.amb = {c.alpha.value_or(0.0), c.beta.value_or(0.0)};
  r.kappa = c.kappa.value_or(exp ? 0.0 : 0.1);
  r.levels = c.levels.value_or(std::vector<int>{0, 1});
  r.n = c.n.value_or(0);
  r.samples = c.samples.value_or(201);
  r.x_min = c.x_min;
  r.x_max = c.x_max;
  r.points = c.points;
  r.format = c.format.value_or(OutputFormat::csv);
  r.out = c.out;
  r.energy_shift = c.energy_shift.value_or(0.0);
  r.fault = c.fault;
  if (c.expected) r.expected = *c.expected;

  for (int level : r.levels) {
    if (level < 0) throw InvalidParameter("levels must be non-negative");
  }
  if (r.n < 0) throw InvalidParameter("level n must be non-negative");
  if (r.samples < 2) throw InvalidParameter("samples must be at least 2");
  if (r.points && *r.points < 3) throw InvalidParameter("points must be at least 3");
  if (r.x_min && r.x_max && !(*r.x_min < *r.x_max)) throw InvalidParameter("x_min must be below x_max");
  for (double v : {r.a, r.b, r.amb.alpha, r.amb.beta, r.kappa, r.energy_shift}) {
    if (!std::isfinite(v)) throw InvalidParameter("model parameters must be finite");
  }
  return r;
}

RunConfig RunConfig::analytic_side() const {
  RunConfig c = *this;
  if (!fault) return c;
  auto apply = [&](double v) { return v * fault->scale + fault->offset; };
  if (fault->parameter == "A") c.a = apply(c.a);
  if (fault->parameter == "B") c.b = apply(c.b);
  if (fault->parameter == "alpha") c.amb.alpha = apply(c.amb.alpha);
  if (fault->parameter == "beta") c.amb.beta = apply(c.amb.beta);
  if (fault->parameter == "kappa") c.kappa = apply(c.kappa);
  return c;
}

}  // namespace pdm::app
