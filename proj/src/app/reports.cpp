#include "pdm/app/reports.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "pdm/errors.hpp"

namespace pdm::app {
namespace {

using ojson = nlohmann::ordered_json;

// JSON has no literal for non-finite numbers; they travel as strings.
ojson number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const ojson& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InvalidParameter("report: expected a number, got " + j.dump());
}

ojson optional_number(const std::optional<double>& v) { return v ? number(*v) : ojson(nullptr); }

std::optional<double> read_optional(const ojson& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return read_number(j.at(key));
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void to_json(ojson& j, const ModelParameters& p) {
  j = ojson{{"A", number(p.a)}, {"B", number(p.b)}, {"alpha", number(p.alpha)}, {"beta", number(p.beta)},
            {"kappa", number(p.kappa)}};
}

void from_json(const ojson& j, ModelParameters& p) {
  p.a = read_number(j.at("A"));
  p.b = read_number(j.at("B"));
  p.alpha = read_number(j.at("alpha"));
  p.beta = read_number(j.at("beta"));
  p.kappa = read_number(j.at("kappa"));
}

void to_json(ojson& j, const SpectrumRow& r) {
  j = ojson{{"n", r.n},
            {"energy_analytic", number(r.energy_analytic)},
            {"energy_numeric", number(r.energy_numeric)},
            {"abs_diff", number(r.abs_diff)},
            {"residual", optional_number(r.residual)},
            {"nodes", r.nodes},
            {"pass", r.pass}};
  if (r.v0) j["v0"] = number(*r.v0);
  if (r.companion_energy) j["companion_energy"] = number(*r.companion_energy);
  if (r.z_charge) j["Z"] = number(*r.z_charge);
  if (r.l_quantum) j["l"] = number(*r.l_quantum);
  if (r.lambda) j["lambda"] = number(*r.lambda);
}

void from_json(const ojson& j, SpectrumRow& r) {
  r.n = j.at("n").get<int>();
  r.energy_analytic = read_number(j.at("energy_analytic"));
  r.energy_numeric = read_number(j.at("energy_numeric"));
  r.abs_diff = read_number(j.at("abs_diff"));
  r.residual = read_optional(j, "residual");
  r.nodes = j.at("nodes").get<int>();
  r.pass = j.at("pass").get<bool>();
  r.v0 = read_optional(j, "v0");
  r.companion_energy = read_optional(j, "companion_energy");
  r.z_charge = read_optional(j, "Z");
  r.l_quantum = read_optional(j, "l");
  r.lambda = read_optional(j, "lambda");
}

void to_json(ojson& j, const SpectrumReport& r) {
  j = ojson{{"command", "spectrum"},
            {"model", r.model},
            {"parameters", r.parameters},
            {"tolerance", number(r.tolerance)},
            {"levels", r.rows},
            {"pass", r.pass}};
}

void from_json(const ojson& j, SpectrumReport& r) {
  r.model = j.at("model").get<std::string>();
  r.parameters = j.at("parameters").get<ModelParameters>();
  r.tolerance = read_number(j.at("tolerance"));
  r.rows = j.at("levels").get<std::vector<SpectrumRow>>();
  r.pass = j.at("pass").get<bool>();
}

void to_json(ojson& j, const WavefunctionSample& s) {
  j = ojson{{"coordinate", number(s.coordinate)}, {"value", number(s.value)}, {"diagnostic", number(s.diagnostic)}};
}

void from_json(const ojson& j, WavefunctionSample& s) {
  s.coordinate = read_number(j.at("coordinate"));
  s.value = read_number(j.at("value"));
  s.diagnostic = read_number(j.at("diagnostic"));
}

void to_json(ojson& j, const WavefunctionReport& r) {
  j = ojson{{"command", "wavefunction"},
            {"model", r.model},
            {"parameters", r.parameters},
            {"n", r.n},
            {"coordinate", r.coordinate},
            {"domain", ojson::array({number(r.domain_lo), number(r.domain_hi)})},
            {"norm", number(r.norm)},
            {"nodes", r.nodes}};
  if (r.hydrogen_gap) j["hydrogen_gap"] = number(*r.hydrogen_gap);
  j["samples"] = r.samples;
}

void from_json(const ojson& j, WavefunctionReport& r) {
  r.model = j.at("model").get<std::string>();
  r.parameters = j.at("parameters").get<ModelParameters>();
  r.n = j.at("n").get<int>();
  r.coordinate = j.at("coordinate").get<std::string>();
  r.domain_lo = read_number(j.at("domain").at(0));
  r.domain_hi = read_number(j.at("domain").at(1));
  r.norm = read_number(j.at("norm"));
  r.nodes = j.at("nodes").get<int>();
  r.hydrogen_gap = read_optional(j, "hydrogen_gap");
  r.samples = j.at("samples").get<std::vector<WavefunctionSample>>();
}

void to_json(ojson& j, const Check& c) {
  j = ojson{{"name", c.name}, {"value", number(c.value)}, {"threshold", number(c.threshold)}, {"pass", c.pass}};
}

void from_json(const ojson& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.value = read_number(j.at("value"));
  c.threshold = read_number(j.at("threshold"));
  c.pass = j.at("pass").get<bool>();
}

void to_json(ojson& j, const VerifyReport& r) {
  j = ojson{{"command", "verify"}, {"model", r.model}, {"parameters", r.parameters}, {"checks", r.checks},
            {"pass", r.pass}};
}

void from_json(const ojson& j, VerifyReport& r) {
  r.model = j.at("model").get<std::string>();
  r.parameters = j.at("parameters").get<ModelParameters>();
  r.checks = j.at("checks").get<std::vector<Check>>();
  r.pass = j.at("pass").get<bool>();
}

std::string to_csv(const SpectrumReport& r) {
  const bool coulomb = !r.rows.empty() && r.rows.front().z_charge.has_value();
  std::ostringstream os;
  os << "n,energy_analytic,energy_numeric,abs_diff,residual,nodes";
  if (coulomb) os << ",Z,l,lambda";
  os << "\r\n";
  for (const SpectrumRow& row : r.rows) {
    os << row.n << ',' << format_double(row.energy_analytic) << ',' << format_double(row.energy_numeric) << ','
       << format_double(row.abs_diff) << ',' << optional_field(row.residual) << ',' << row.nodes;
    if (coulomb) {
      os << ',' << optional_field(row.z_charge) << ',' << optional_field(row.l_quantum) << ','
         << optional_field(row.lambda);
    }
    os << "\r\n";
  }
  return os.str();
}

std::string to_csv(const WavefunctionReport& r) {
  // The last column counts sign changes up to and including the row, so the
  // final row carries the node count of the whole sample.
  std::ostringstream os;
  os << r.coordinate << ",value,diagnostic,nodes\r\n";
  int nodes = 0;
  double last = 0.0;
  double peak = 0.0;
  for (const WavefunctionSample& s : r.samples) peak = std::max(peak, std::abs(s.value));
  for (const WavefunctionSample& s : r.samples) {
    if (std::abs(s.value) > 1e-9 * peak) {
      if (last != 0.0 && (last < 0.0) != (s.value < 0.0)) ++nodes;
      last = s.value;
    }
    os << format_double(s.coordinate) << ',' << format_double(s.value) << ',' << format_double(s.diagnostic) << ','
       << nodes << "\r\n";
  }
  return os.str();
}

std::string to_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << "name,value,threshold,pass\r\n";
  for (const Check& c : r.checks) {
    os << csv_field(c.name) << ',' << format_double(c.value) << ',' << format_double(c.threshold) << ','
       << (c.pass ? "true" : "false") << "\r\n";
  }
  return os.str();
}

}  // namespace pdm::app
