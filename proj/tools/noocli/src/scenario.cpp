#include "noocli/scenario.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <span>

namespace noocli {

namespace {

using noosphere::StateVector;

std::span<const std::string_view> allowed_parameters(Scenario s) {
  static constexpr std::array<std::string_view, 1> kExp{"k1"};
  static constexpr std::array<std::string_view, 3> kLv{"k1", "k2", "k3"};
  static constexpr std::array<std::string_view, 4> kDep{"k1", "k2", "k3", "k4"};
  static constexpr std::array<std::string_view, 3> kMap{"eps", "alpha", "A"};
  switch (s) {
    case Scenario::kExponential: return kExp;
    case Scenario::kLotkaVolterra: return kLv;
    case Scenario::kDepletion: return kDep;
    case Scenario::kParadigm: return kMap;
  }
  return {};
}

double value_or(const RunConfig& c, const std::string& key, double fallback) {
  const auto it = c.overrides.find(key);
  return it == c.overrides.end() ? fallback : it->second;
}

}  // namespace

void validate(const RunConfig& config) {
  const auto allowed = allowed_parameters(config.scenario);
  for (const auto& [key, value] : config.overrides) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw UsageError("parameter --" + key + " does not apply to this scenario");
    }
  }
  if (config.scenario == Scenario::kParadigm) {
    if (config.t_end || config.h || config.substeps) {
      throw UsageError("--t-end, --h and --substeps do not apply to the paradigm map");
    }
  } else if (config.steps) {
    throw UsageError("--steps applies only to the paradigm map");
  }
}

noosphere::ExponentialParams exponential_params(const RunConfig& config) {
  noosphere::ExponentialParams p;
  p.k1 = config.mode == Mode::kAppendix ? 2.0 : std::numbers::ln2;
  p.k1 = value_or(config, "k1", p.k1);
  p.validate();
  return p;
}

noosphere::LotkaVolterraParams lv_params(const RunConfig& config) {
  noosphere::LotkaVolterraParams p;
  p.k4 = config.scenario == Scenario::kDepletion ? 0.01 : 0.0;
  p.k1 = value_or(config, "k1", p.k1);
  p.k2 = value_or(config, "k2", p.k2);
  p.k3 = value_or(config, "k3", p.k3);
  p.k4 = value_or(config, "k4", p.k4);
  p.validate();
  return p;
}

noosphere::EnergyParadigmParams paradigm_params(const RunConfig& config) {
  noosphere::EnergyParadigmParams p;
  p.epsilon = value_or(config, "eps", p.epsilon);
  p.alpha = value_or(config, "alpha", p.alpha);
  p.A = value_or(config, "A", p.A);
  p.validate();
  return p;
}

noosphere::TimeGrid time_grid(const RunConfig& config) {
  const double default_end = config.scenario == Scenario::kExponential ? 17.0 : 100.0;
  noosphere::TimeGrid grid{0.0, config.t_end.value_or(default_end), config.h.value_or(0.01)};
  grid.validate();
  return grid;
}

std::size_t substeps(const RunConfig& config) {
  // The predator-prey orbits are steep; integrate at h/100 internally.
  const std::size_t fallback = config.scenario == Scenario::kExponential ? 1 : 100;
  return config.substeps.value_or(fallback);
}

noosphere::Trajectory run_scenario(const RunConfig& config) {
  validate(config);
  switch (config.scenario) {
    case Scenario::kExponential: {
      const auto p = exponential_params(config);
      return noosphere::integrate_rk4(noosphere::exp_rhs(p), StateVector({"y1"}, {p.y0}),
                                      time_grid(config), substeps(config));
    }
    case Scenario::kLotkaVolterra:
    case Scenario::kDepletion: {
      const auto p = lv_params(config);
      return noosphere::integrate_rk4(noosphere::lv_rhs(p), StateVector({"y1", "y2"}, {0.02, 1.0}),
                                      time_grid(config), substeps(config));
    }
    case Scenario::kParadigm: {
      const auto p = paradigm_params(config);
      return noosphere::iterate_map(noosphere::paradigm_map(p), StateVector({"y1"}, {10.0}),
                                    config.steps.value_or(100));
    }
  }
  throw UsageError("unknown scenario");
}

}  // namespace noocli
