#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "noosphere/error.hpp"

namespace noosphere {

enum class Boundary { kToroidal, kUnbounded };

struct Cell {
  std::int64_t row = 0;
  std::int64_t col = 0;

  auto operator<=>(const Cell&) const = default;
};

struct BoundingBox {
  std::int64_t top = 0, left = 0, bottom = -1, right = -1;  // inclusive

  bool empty() const noexcept { return bottom < top || right < left; }
  std::int64_t height() const noexcept { return empty() ? 0 : bottom - top + 1; }
  std::int64_t width() const noexcept { return empty() ? 0 : right - left + 1; }
};

// Game of Life universe. A toroidal grid has fixed dimensions and wraps at
// the edges; an unbounded grid stores a finite set of live cells.
class Grid {
 public:
  static Grid toroidal(std::size_t width, std::size_t height);
  static Grid unbounded(std::vector<Cell> live = {});

  Boundary boundary() const noexcept { return boundary_; }
  bool is_toroidal() const noexcept { return boundary_ == Boundary::kToroidal; }
  // Torus dimensions; for unbounded grids, the bounding box dimensions.
  std::size_t width() const noexcept;
  std::size_t height() const noexcept;

  // Coordinates wrap on a torus.
  bool alive(std::int64_t row, std::int64_t col) const;
  void set(std::int64_t row, std::int64_t col, bool alive = true);

  std::size_t population() const noexcept;
  // Sorted row-major. Torus cells have 0 <= row < height, 0 <= col < width.
  std::vector<Cell> live_cells() const;
  BoundingBox bounds() const;

  // Cyclic shift on a torus, plain translation when unbounded.
  Grid shifted(std::int64_t drow, std::int64_t dcol) const;

  bool operator==(const Grid&) const = default;

 private:
  friend Grid step(const Grid& grid);

  Boundary boundary_ = Boundary::kUnbounded;
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> dense_;  // toroidal, row-major
  std::vector<Cell> live_;           // unbounded, sorted unique
};

// One synchronous B3/S23 update over the Moore neighbourhood.
Grid step(const Grid& grid);
Grid run(const Grid& grid, std::size_t steps);
// Population after each of 0..steps generations.
std::vector<std::size_t> population_series(const Grid& grid, std::size_t steps);

inline constexpr std::size_t kMaxEdenCells = 24;

// True iff no toroidal grid of the same dimensions steps to `grid`. Decided
// by exhaustive search over all 2^(w*h) candidates. Throws kUnsupported for
// unbounded grids and kCapacity above kMaxEdenCells cells.
bool is_garden_of_eden(const Grid& grid);

struct GrowthClass {
  enum class Kind { kBounded, kLinear, kQuadratic };

  Kind kind = Kind::kBounded;
  double fit_exponent = 0.0;
};

const char* to_string(GrowthClass::Kind kind);

inline constexpr std::size_t kMinGrowthHorizon = 64;

// Fits log(population) against log(generation) over the second half of the
// horizon. Exponent < 0.3 is bounded, [0.7, 1.3] linear, [1.7, 2.3]
// quadratic; anything else throws kUnclassified. A pattern that dies out is
// bounded with exponent 0.
GrowthClass growth_class(const Grid& pattern, std::size_t horizon);

}  // namespace noosphere
