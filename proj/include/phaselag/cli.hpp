#ifndef PHASELAG_CLI_HPP
#define PHASELAG_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phaselag/analysis.hpp"
#include "phaselag/model.hpp"
#include "phaselag/timeevo.hpp"

namespace phaselag {

/// Malformed or unknown configuration entries (exit code 2).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Everything a single invocation needs. Defaults come from the case preset.
struct RunConfig {
  int case_id = 1;
  PhaseLagModel model;
  DomainSpec domain;
  bool paper_literal_generator = false;

  // [sweep]
  std::size_t modes = 200;  ///< Case 1 mode cutoff K
  double h = 1.0 / 64.0;    ///< Case 2 mesh width
  GammaGrid gamma;
  bool shifted = true;
  std::optional<double> c0;  ///< default: max(0, numerical abscissa)
  bool convergence_check = true;  ///< rerun at 2K or h/2

  // [fit]
  double fit_decades = 3.0;
  std::optional<double> fit_lo;
  std::optional<double> fit_hi;

  // [evolve]
  InitialData initial = InitialData::plate_mode;
  double dt = 1e-3;
  double T = 1.0;
  bool half_step_check = true;
  double growth_T = 20.0;
  std::size_t growth_points = 40;
  std::size_t smoothing_points = 31;

  // [output]
  std::filesystem::path out_dir = "phaselag_out";
  bool svg = true;

  // [numerics]
  std::uint64_t seed = 20240607;
  int max_iterations = 500;
  double tolerance = 1e-13;
  std::size_t block_size = 6;

  linalg::NormOptions norm_options() const;
};

/// Case 1: n = 1, a = [1, 0.5], b = [1, 0.25], κ₁ = 1, β = 1, unit square, K = 200.
/// Case 2: n = 1, same a and b, β = 0.5, κ₁ = 1, κ₂ = 2, R0 = 0.5, R = 1, h = 1/64.
RunConfig preset(int case_id);

/// Reads an INI file over `base`. Sections: [run] [model] [domain] [sweep]
/// [fit] [evolve] [output] [numerics]. Unknown sections or keys throw ConfigError.
RunConfig load_config(const std::filesystem::path& path, RunConfig base);
/// Same, from an in-memory string.
RunConfig parse_config(const std::string& text, RunConfig base);
/// The `case` entry of a config file, if any.
std::optional<int> config_case(const std::filesystem::path& path);

/// Builds the Case 1 block set or the Case 2 operator for the config.
Generator build_generator(const RunConfig& cfg);

/// Command-line entry point. Returns 0 on success, 2 on configuration or
/// validation errors, 3 on numerical failure.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace phaselag

#endif  // PHASELAG_CLI_HPP
