#pragma once

#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "noosphere/integrator.hpp"

namespace noosphere {

/// Malthusian growth of stored information, y' = k1 y.
struct ExponentialParams {
  double k1 = std::numbers::ln2;  ///< growth rate per year; ln 2 doubles yearly
  double y0 = 1000.0;             ///< information at base_year, in exabytes
  int base_year = 2013;

  void validate() const;
};

/// Predator-prey coupling of electric energy (prey, y1) and the
/// noosphere (predator, y2). k4 > 0 adds a depletion term -k4 y1^2.
struct LotkaVolterraParams {
  double k1 = 1.0;  ///< energy production rate
  double k2 = 10.0; ///< noosphere loss rate
  double k3 = 1.0;  ///< interaction (predation) rate
  double k4 = 0.0;  ///< resource depletion pressure

  void validate() const;
};

/// Coefficients of the quadratic energy-paradigm recurrence.
struct EnergyParadigmParams {
  double epsilon = 2.0;
  double alpha = 0.5;
  double A = 100.0;

  void validate() const;
};

/// Information-to-electricity coupling: a fixed number of nuclear-plant
/// equivalents is added per doubling of stored information.
struct EnergyModel {
  double base_plants = 30.0;
  double base_percent = 2.0;
  double plants_per_doubling = 30.0;

  /// Plants equal to 100% of global electricity.
  double plants_at_full() const { return base_plants * 100.0 / base_percent; }
  double percent_of(double plants) const { return plants * base_percent / base_plants; }
};

struct EnergyDemand {
  double plants = 0.0;
  double percent = 0.0;
};

struct ReportRow {
  int year = 0;
  double information = 0.0;  // EB
  double plants = 0.0;
  double percent = 0.0;
};

struct SingularityReport {
  std::vector<ReportRow> rows;
  /// First year whose percent reaches 100; empty if beyond the horizon.
  std::optional<int> collapse_year;
};

// Closed form y0 exp(k1 t). Throws kDomain for t < 0, kDiverged on overflow.
double exp_info(const ExponentialParams& params, double t);
VectorField exp_rhs(const ExponentialParams& params);

VectorField lv_rhs(const LotkaVolterraParams& params);
// First integral H = k3 y1 - k2 ln y1 + k3 y2 - k1 ln y2 of the k4 = 0 system.
double lv_invariant(const LotkaVolterraParams& params, double y1, double y2);
// Coexistence point (k2/k3, (k1 - k4 k2/k3)/k3). Throws kNoCoexistence when
// the predator coordinate is not positive.
std::pair<double, double> lv_equilibrium(const LotkaVolterraParams& params);

DiscreteMap paradigm_map(const EnergyParadigmParams& params);
double paradigm_step(const EnergyParadigmParams& params, double y);
// Non-trivial fixed point A (eps - 1) / ((1 - alpha) eps).
double paradigm_fixed_point(const EnergyParadigmParams& params);

// log2(info / y0). Throws kDomain for info < y0.
double doublings(double info, const ExponentialParams& params);
EnergyDemand plants_required(double info, const EnergyModel& energy,
                             const ExponentialParams& params);

// One row per calendar year base_year .. base_year + horizon.
SingularityReport singularity_report(const ExponentialParams& params, const EnergyModel& energy,
                                     int horizon);

}  // namespace noosphere
