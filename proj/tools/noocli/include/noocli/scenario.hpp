#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "noosphere/integrator.hpp"
#include "noosphere/noosim.hpp"

namespace noocli {

enum class Scenario { kExponential, kLotkaVolterra, kDepletion, kParadigm };
enum class Mode { kTextbook, kAppendix };

struct RunConfig {
  Scenario scenario = Scenario::kExponential;
  Mode mode = Mode::kTextbook;
  // Parameter name (k1..k4, eps, alpha, A) -> value.
  std::map<std::string, double> overrides;
  std::optional<double> t_end;
  std::optional<double> h;
  std::optional<std::size_t> substeps;
  std::optional<std::size_t> steps;  // paradigm only
  std::string csv_path;              // empty: standard output
};

// Thrown for configurations that name parameters or flags the scenario
// does not have. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

noosphere::ExponentialParams exponential_params(const RunConfig& config);
noosphere::LotkaVolterraParams lv_params(const RunConfig& config);
noosphere::EnergyParadigmParams paradigm_params(const RunConfig& config);
// Sampling grid and internal substeps after defaults and overrides.
noosphere::TimeGrid time_grid(const RunConfig& config);
std::size_t substeps(const RunConfig& config);

void validate(const RunConfig& config);

// Runs the configured scenario. Throws UsageError, noosphere::Error, or
// noosphere::DivergedError with the partial trajectory.
noosphere::Trajectory run_scenario(const RunConfig& config);

}  // namespace noocli
