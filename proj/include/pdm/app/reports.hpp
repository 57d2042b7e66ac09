#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pdm::app {

struct ModelParameters {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double kappa = 0.0;
  bool operator==(const ModelParameters&) const = default;
};

struct SpectrumRow {
  int n = 0;
  double energy_analytic = 0.0;
  double energy_numeric = 0.0;
  double abs_diff = 0.0;
  /// Closed-form residual; absent when the level has no closed-form eigenfunction.
  std::optional<double> residual;
  int nodes = 0;
  bool pass = false;
  // exp-morse
  std::optional<double> v0;
  std::optional<double> companion_energy;
  // pdm-coulomb
  std::optional<double> z_charge;
  std::optional<double> l_quantum;
  std::optional<double> lambda;
  bool operator==(const SpectrumRow&) const = default;
};

struct SpectrumReport {
  std::string model;
  ModelParameters parameters;
  double tolerance = 0.0;
  std::vector<SpectrumRow> rows;
  bool pass = false;
  bool operator==(const SpectrumReport&) const = default;
};

struct WavefunctionSample {
  double coordinate = 0.0;
  double value = 0.0;
  /// |value|^2 / sqrt(M) at the sample.
  double diagnostic = 0.0;
  bool operator==(const WavefunctionSample&) const = default;
};

struct WavefunctionReport {
  std::string model;
  ModelParameters parameters;
  int n = 0;
  std::string coordinate;  ///< "x" or "r"
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  double norm = 0.0;
  int nodes = 0;
  std::vector<WavefunctionSample> samples;
  /// Max pointwise gap to the hydrogenic closed form (pdm-coulomb only).
  std::optional<double> hydrogen_gap;
  bool operator==(const WavefunctionReport&) const = default;
};

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool operator==(const Check&) const = default;
};

struct VerifyReport {
  std::string model;
  ModelParameters parameters;
  std::vector<Check> checks;
  bool pass = true;
  bool operator==(const VerifyReport&) const = default;
};

void to_json(nlohmann::ordered_json& j, const ModelParameters& p);
void from_json(const nlohmann::ordered_json& j, ModelParameters& p);
void to_json(nlohmann::ordered_json& j, const SpectrumRow& r);
void from_json(const nlohmann::ordered_json& j, SpectrumRow& r);
void to_json(nlohmann::ordered_json& j, const SpectrumReport& r);
void from_json(const nlohmann::ordered_json& j, SpectrumReport& r);
void to_json(nlohmann::ordered_json& j, const WavefunctionSample& s);
void from_json(const nlohmann::ordered_json& j, WavefunctionSample& s);
void to_json(nlohmann::ordered_json& j, const WavefunctionReport& r);
void from_json(const nlohmann::ordered_json& j, WavefunctionReport& r);
void to_json(nlohmann::ordered_json& j, const Check& c);
void from_json(const nlohmann::ordered_json& j, Check& c);
void to_json(nlohmann::ordered_json& j, const VerifyReport& r);
void from_json(const nlohmann::ordered_json& j, VerifyReport& r);

/// %.17g; non-finite values print as inf, -inf or nan.
std::string format_double(double v);
/// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

std::string to_csv(const SpectrumReport& r);
std::string to_csv(const WavefunctionReport& r);
std::string to_csv(const VerifyReport& r);

/// Pretty-printed JSON with a trailing newline.
template <class Report>
std::string to_json_text(const Report& r) {
  return nlohmann::ordered_json(r).dump(2) + "\n";
}

}  // namespace pdm::app
