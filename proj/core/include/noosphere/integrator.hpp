#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "noosphere/error.hpp"

namespace noosphere {

// Uniform sampling grid [t0, t_end] with spacing h.
struct TimeGrid {
  double t0 = 0.0;
  double t_end = 1.0;
  double h = 0.01;

  // round((t_end - t0) / h). Throws kDomain if the grid is invalid.
  std::size_t steps() const;
  // Throws kDomain unless h > 0, t_end > t0, all finite and h tiles the
  // interval to within 1 part in 1e9.
  void validate() const;
};

// Named real-valued system state. Names and values are parallel arrays.
struct StateVector {
  std::vector<std::string> names;
  std::vector<double> values;

  StateVector() = default;
  StateVector(std::vector<std::string> n, std::vector<double> v);

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double at(std::string_view name) const;
  bool finite() const noexcept;

  bool operator==(const StateVector&) const = default;
};

struct Sample {
  double t = 0.0;
  std::vector<double> state;

  bool operator==(const Sample&) const = default;
};

// Time series of states sharing one set of component names.
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(std::vector<std::string> names) : names_(std::move(names)) {}

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  const Sample& front() const { return samples_.front(); }
  const Sample& back() const { return samples_.back(); }

  StateVector state(std::size_t i) const { return {names_, samples_[i].state}; }
  // Column of component `c` over all samples.
  std::vector<double> column(std::size_t c) const;
  std::vector<double> times() const;

  void push_back(double t, std::vector<double> state);
  void reserve(std::size_t n) { samples_.reserve(n); }

  bool operator==(const Trajectory&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Sample> samples_;
};

// Raised when a state becomes non-finite or exceeds kDivergenceBound in
// magnitude. Carries everything emitted before the failure plus the last
// valid internal state, which may lie between grid points.
class DivergedError : public Error {
 public:
  DivergedError(const std::string& message, Trajectory partial, Sample last_valid);

  const Trajectory& partial() const noexcept { return partial_; }
  const Sample& last_valid() const noexcept { return last_valid_; }

 private:
  Trajectory partial_;
  Sample last_valid_;
};

inline constexpr double kDivergenceBound = 1e300;

// dydt = f(t, y). Writes into `dydt`, which has the same size as `y`.
using VectorField =
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;
// y_{n+1} = g(y_n). Writes into `next`.
using DiscreteMap = std::function<void(std::span<const double> y, std::span<double> next)>;

// Classical fixed-step RK4. Every grid interval is split into `substeps`
// internal steps of size h / substeps; only grid points are emitted.
Trajectory integrate_rk4(const VectorField& rhs, const StateVector& y0,
                         const TimeGrid& grid, std::size_t substeps = 1);

// Orbit y0, g(y0), ..., g^steps(y0) stamped 0..steps.
Trajectory iterate_map(const DiscreteMap& map, const StateVector& y0, std::size_t steps);

}  // namespace noosphere
