#include "noosphere/noosim.hpp"

#include <cmath>
#include <string>

namespace noosphere {

void ExponentialParams::validate() const {
  if (!(k1 > 0.0) || !std::isfinite(k1)) throw Error(ErrorKind::kDomain, "k1 must be positive");
  if (!(y0 > 0.0) || !std::isfinite(y0)) throw Error(ErrorKind::kDomain, "y0 must be positive");
}

void LotkaVolterraParams::validate() const {
  if (!(k1 > 0.0 && k2 > 0.0 && k3 > 0.0)) {
    throw Error(ErrorKind::kDomain, "k1, k2 and k3 must be positive");
  }
  if (!(k4 >= 0.0)) throw Error(ErrorKind::kDomain, "k4 must be non-negative");
}

void EnergyParadigmParams::validate() const {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::kDomain, "epsilon must be positive");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::kDomain, "alpha must be in [0, 1)");
  if (!(A > 0.0)) throw Error(ErrorKind::kDomain, "A must be positive");
}

double exp_info(const ExponentialParams& params, double t) {
  params.validate();
  if (!(t >= 0.0)) throw Error(ErrorKind::kDomain, "t must be non-negative");
  const double y = params.y0 * std::exp(params.k1 * t);
  if (!std::isfinite(y) || y > kDivergenceBound) {
    throw Error(ErrorKind::kDiverged, "information overflows at t = " + std::to_string(t));
  }
  return y;
}

VectorField exp_rhs(const ExponentialParams& params) {
  return [k1 = params.k1](double, std::span<const double> y, std::span<double> dydt) {
    dydt[0] = k1 * y[0];
  };
}

VectorField lv_rhs(const LotkaVolterraParams& params) {
  // Grouped as y1 ((k1 - k4 y1) - k3 y2) so the field vanishes exactly at
  // the equilibrium returned by lv_equilibrium.
  return [p = params](double, std::span<const double> y, std::span<double> dydt) {
    dydt[0] = y[0] * ((p.k1 - p.k4 * y[0]) - p.k3 * y[1]);
    dydt[1] = y[1] * (-p.k2 + p.k3 * y[0]);
  };
}

double lv_invariant(const LotkaVolterraParams& params, double y1, double y2) {
  if (params.k4 != 0.0) throw Error(ErrorKind::kDomain, "invariant exists only for k4 = 0");
  if (!(y1 > 0.0 && y2 > 0.0)) throw Error(ErrorKind::kDomain, "invariant needs y1, y2 > 0");
  return params.k3 * y1 - params.k2 * std::log(y1) + params.k3 * y2 - params.k1 * std::log(y2);
}

std::pair<double, double> lv_equilibrium(const LotkaVolterraParams& params) {
  if (!(params.k3 > 0.0)) throw Error(ErrorKind::kDomain, "k3 must be positive");
  const double y1 = params.k2 / params.k3;
  const double y2 = (params.k1 - params.k4 * y1) / params.k3;
  if (!(y2 > 0.0)) {
    throw Error(ErrorKind::kNoCoexistence, "depletion pressure leaves no coexistence point");
  }
  return {y1, y2};
}

double paradigm_step(const EnergyParadigmParams& p, double y) {
  return p.epsilon * y - ((1.0 - p.alpha) * p.epsilon / p.A) * y * y;
}

DiscreteMap paradigm_map(const EnergyParadigmParams& params) {
  return [p = params](std::span<const double> y, std::span<double> next) {
    next[0] = paradigm_step(p, y[0]);
  };
}

double paradigm_fixed_point(const EnergyParadigmParams& p) {
  p.validate();
  return p.A * (p.epsilon - 1.0) / ((1.0 - p.alpha) * p.epsilon);
}

double doublings(double info, const ExponentialParams& params) {
  params.validate();
  if (!(info >= params.y0)) throw Error(ErrorKind::kDomain, "information below the baseline y0");
  return std::log2(info / params.y0);
}

EnergyDemand plants_required(double info, const EnergyModel& energy,
                             const ExponentialParams& params) {
  const double plants = energy.base_plants + energy.plants_per_doubling * doublings(info, params);
  return {plants, energy.percent_of(plants)};
}

SingularityReport singularity_report(const ExponentialParams& params, const EnergyModel& energy,
                                     int horizon) {
  if (horizon < 1) throw Error(ErrorKind::kDomain, "horizon must be at least one year");
  params.validate();
  SingularityReport report;
  report.rows.reserve(static_cast<std::size_t>(horizon) + 1);
  for (int t = 0; t <= horizon; ++t) {
    const double info = exp_info(params, t);
    const auto demand = plants_required(info, energy, params);
    report.rows.push_back({params.base_year + t, info, demand.plants, demand.percent});
    if (!report.collapse_year && demand.percent >= 100.0) {
      report.collapse_year = params.base_year + t;
    }
  }
  return report;
}

}  // namespace noosphere
