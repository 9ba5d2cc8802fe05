#include "noosphere/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace noosphere {

namespace {

bool state_ok(std::span<const double> y) {
  return std::all_of(y.begin(), y.end(),
                     [](double v) { return std::isfinite(v) && std::abs(v) <= kDivergenceBound; });
}

double grid_time(const TimeGrid& grid, std::size_t i, std::size_t n) {
  if (i == n) return grid.t_end;
  return grid.t0 + (grid.t_end - grid.t0) * (static_cast<double>(i) / static_cast<double>(n));
}

}  // namespace

void TimeGrid::validate() const {
  if (!std::isfinite(t0) || !std::isfinite(t_end) || !std::isfinite(h)) {
    throw Error(ErrorKind::kDomain, "time grid must be finite");
  }
  if (!(h > 0.0)) throw Error(ErrorKind::kDomain, "time grid step must be positive");
  if (!(t_end > t0)) throw Error(ErrorKind::kDomain, "time grid must satisfy t_end > t0");
  const double span = t_end - t0;
  const double n = std::round(span / h);
  if (n < 1.0 || n > 1e12) throw Error(ErrorKind::kDomain, "time grid step count out of range");
  if (std::abs(n * h - span) > 1e-9 * span) {
    throw Error(ErrorKind::kDomain, "time grid step does not tile [t0, t_end]");
  }
}

std::size_t TimeGrid::steps() const {
  validate();
  return static_cast<std::size_t>(std::round((t_end - t0) / h));
}

StateVector::StateVector(std::vector<std::string> n, std::vector<double> v)
    : names(std::move(n)), values(std::move(v)) {
  if (names.size() != values.size()) {
    throw Error(ErrorKind::kDomain, "state vector names and values differ in length");
  }
}

double StateVector::at(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return values[i];
  }
  throw Error(ErrorKind::kDomain, "no state component named '" + std::string(name) + "'");
}

bool StateVector::finite() const noexcept { return state_ok(values); }

std::vector<double> Trajectory::column(std::size_t c) const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.state.at(c));
  return out;
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.t);
  return out;
}

void Trajectory::push_back(double t, std::vector<double> state) {
  samples_.push_back({t, std::move(state)});
}

DivergedError::DivergedError(const std::string& message, Trajectory partial, Sample last_valid)
    : Error(ErrorKind::kDiverged, message),
      partial_(std::move(partial)),
      last_valid_(std::move(last_valid)) {}

Trajectory integrate_rk4(const VectorField& rhs, const StateVector& y0, const TimeGrid& grid,
                         std::size_t substeps) {
  const std::size_t n = grid.steps();
  if (substeps == 0) throw Error(ErrorKind::kDomain, "substeps must be at least 1");

  Trajectory traj(y0.names);
  if (!y0.finite()) {
    throw DivergedError("initial state is not finite", std::move(traj), {grid.t0, y0.values});
  }
  traj.reserve(n + 1);

  const std::size_t dim = y0.size();
  std::vector<double> y = y0.values;
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  traj.push_back(grid.t0, y);
  for (std::size_t i = 0; i < n; ++i) {
    const double ta = grid_time(grid, i, n);
    const double tb = grid_time(grid, i + 1, n);
    const double dt = (tb - ta) / static_cast<double>(substeps);
    for (std::size_t j = 0; j < substeps; ++j) {
      const double t = ta + dt * static_cast<double>(j);
      rhs(t, y, k1);
      for (std::size_t c = 0; c < dim; ++c) tmp[c] = y[c] + 0.5 * dt * k1[c];
      rhs(t + 0.5 * dt, tmp, k2);
      for (std::size_t c = 0; c < dim; ++c) tmp[c] = y[c] + 0.5 * dt * k2[c];
      rhs(t + 0.5 * dt, tmp, k3);
      for (std::size_t c = 0; c < dim; ++c) tmp[c] = y[c] + dt * k3[c];
      rhs(t + dt, tmp, k4);
      for (std::size_t c = 0; c < dim; ++c) {
        tmp[c] = y[c] + dt / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
      }
      if (!state_ok(tmp)) {
        throw DivergedError("integration diverged near t = " + std::to_string(t + dt),
                            std::move(traj), {t, y});
      }
      y.swap(tmp);
    }
    traj.push_back(tb, y);
  }
  return traj;
}

Trajectory iterate_map(const DiscreteMap& map, const StateVector& y0, std::size_t steps) {
  Trajectory traj(y0.names);
  if (!y0.finite()) {
    throw DivergedError("initial state is not finite", std::move(traj), {0.0, y0.values});
  }
  traj.reserve(steps + 1);
  std::vector<double> y = y0.values;
  std::vector<double> next(y.size());
  traj.push_back(0.0, y);
  for (std::size_t i = 1; i <= steps; ++i) {
    map(y, next);
    if (!state_ok(next)) {
      throw DivergedError("map iteration diverged at step " + std::to_string(i), std::move(traj),
                          {static_cast<double>(i - 1), y});
    }
    y.swap(next);
    traj.push_back(static_cast<double>(i), y);
  }
  return traj;
}

}  // namespace noosphere
