#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pdm/domain.hpp"

namespace pdm::app {

enum class ModelKind { exp_morse, rational_morse, pdm_coulomb };
enum class OutputFormat { csv, json };

std::string_view to_string(ModelKind kind);
ModelKind parse_model(std::string_view name);
std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view name);

/// Perturbation applied to one parameter of the closed-form side only:
/// value -> value * scale + offset. The numeric operator keeps the true value.
struct FaultInjection {
  std::string parameter;
  double scale = 1.0;
  double offset = 0.0;
};

/// Independently computed reference values shipped with a config.
/// Each vector is indexed by position in the `levels` list.
struct GoldenValues {
  std::vector<double> energy;
  std::vector<double> v0;
  std::vector<double> z_charge;
  std::vector<double> l_quantum;
  std::vector<double> lambda;
  std::optional<double> mu_ground;
  std::optional<double> b_prime_squared;
  bool empty() const;
};

/// Every field optional so that flags, a config file and model defaults can be layered.
struct ConfigLayer {
  std::optional<ModelKind> model;
  std::optional<double> a, b, alpha, beta, kappa;
  std::optional<std::vector<int>> levels;
  std::optional<int> n;
  std::optional<int> samples;
  std::optional<double> x_min, x_max;
  std::optional<int> points;
  std::optional<OutputFormat> format;
  std::optional<std::string> out;
  std::optional<double> energy_shift;
  std::optional<FaultInjection> fault;
  std::optional<GoldenValues> expected;

  /// Fields set in `over` replace those set here.
  void overlay(const ConfigLayer& over);
};

/// Parses a config object; unknown keys and ill-typed values throw InvalidParameter.
ConfigLayer parse_config(const nlohmann::json& j);
ConfigLayer load_config_file(const std::filesystem::path& path);

/// Fully resolved configuration.
struct RunConfig {
  ModelKind model = ModelKind::rational_morse;
  double a = 0.0;
  double b = 0.0;
  AmbiguityParams amb;
  double kappa = 0.0;
  std::vector<int> levels;
  int n = 0;
  int samples = 201;
  std::optional<double> x_min, x_max;
  std::optional<int> points;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out;
  double energy_shift = 0.0;
  std::optional<FaultInjection> fault;
  GoldenValues expected;

  /// Parameters after fault injection (equal to the true ones without it).
  RunConfig analytic_side() const;
};

/// Fills unset fields with model defaults and checks the basic ranges.
RunConfig resolve(const ConfigLayer& layer);

}  // namespace pdm::app
