#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir/classical.hpp"
#include "casimir/dynamics.hpp"
#include "casimir/model.hpp"
#include "casimir/quantum_analytic.hpp"

namespace casimir::cli {

/// Name of the environment variable that overrides output.directory.
inline constexpr const char* kOutputDirEnv = "CASIMIR_LAB_OUTPUT_DIR";

/// Malformed or inconsistent run configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class OutputFormat { Csv, Json };

struct GridConfig {
  double y_min = 0.0;
  double y_max = 5.0;
  int points = 11;

  std::vector<double> values() const;
};

struct OracleConfig {
  int n_max = 40;
  double convergence_tol = 1e-6;
  std::optional<double> y;  // defaults to grid.y_min
  std::vector<int> annihilation_orders{10, 11, 12, 13, 14};
};

struct VacuumContentConfig {
  std::optional<double> pair_y;  // defaults to grid.y_min
  int pair_n_max = 20;
  Branch branch = Branch::Plus;
};

struct ClassicalConfig {
  PhaseState initial{.x1 = 0.3, .x2 = -0.1, .y = 2.0, .p1 = 0.0, .p2 = 0.2, .p_y = 0.0, .t = 0.0};
  double dt = 0.01;
  double t_max = 100.0;
  IntegratorOrder order = IntegratorOrder::Fourth;
  int record_every = 1;
};

struct OutputConfig {
  std::filesystem::path directory = "out";
  OutputFormat format = OutputFormat::Csv;
  int precision = 10;
};

struct RunConfig {
  ModelParams model{};
  GridConfig grid{};
  OracleConfig oracle{};
  DynamicsConfig dynamics{};
  VacuumContentConfig vacuum{};
  ClassicalConfig classical{};
  OutputConfig output{};
};

/// Builds a RunConfig from a JSON document. Missing keys keep their
/// defaults; unknown keys and ill-typed values raise ConfigError naming the
/// field. Model physics (positivity, g < k) is checked later by validate().
RunConfig parse_run_config(const nlohmann::json& document);
RunConfig load_run_config(const std::filesystem::path& path);

/// Structural checks that do not need the model to be physical: grid inside
/// the coupling domain, points >= 2, precision in [6, 17].
void check_run_config(const RunConfig& config);

/// The JSON form of a config (used to echo the effective config).
nlohmann::ordered_json to_json(const RunConfig& config);

}  // namespace casimir::cli
