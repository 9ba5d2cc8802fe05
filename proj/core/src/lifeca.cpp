#include "noosphere/lifeca.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace noosphere {

namespace {

constexpr bool next_state(bool alive, int neighbours) {
  return neighbours == 3 || (alive && neighbours == 2);
}

std::int64_t wrap(std::int64_t v, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

Grid step_torus(const Grid& grid) {
  const std::size_t w = grid.width();
  const std::size_t h = grid.height();
  Grid out = Grid::toroidal(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const auto row = static_cast<std::int64_t>(r);
      const auto col = static_cast<std::int64_t>(c);
      int n = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if ((dr != 0 || dc != 0) && grid.alive(row + dr, col + dc)) ++n;
        }
      }
      if (next_state(grid.alive(row, col), n)) out.set(row, col);
    }
  }
  return out;
}

// Counts neighbours by emitting eight contributions per live cell and
// sorting; cost depends only on the population.
std::vector<Cell> step_scattered(const std::vector<Cell>& live) {
  std::vector<Cell> hits;
  hits.reserve(live.size() * 8);
  for (const auto& c : live) {
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr != 0 || dc != 0) hits.push_back({c.row + dr, c.col + dc});
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<Cell> next;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    const int n = static_cast<int>(j - i);
    if (n == 3 || (n == 2 && std::binary_search(live.begin(), live.end(), hits[i]))) {
      next.push_back(hits[i]);
    }
    i = j;
  }
  return next;
}

// Evaluates the bounding box plus a one-cell margin on a dense scratch
// buffer; nothing outside that margin can be born. Falls back to
// step_scattered when the box is mostly empty.
std::vector<Cell> step_unbounded(const std::vector<Cell>& live, const BoundingBox& box) {
  if (live.empty()) return {};
  const double area = static_cast<double>(box.height() + 4) * static_cast<double>(box.width() + 4);
  if (area > 64.0 * static_cast<double>(live.size()) + 4096.0) return step_scattered(live);
  const std::int64_t pad = 2;
  const std::int64_t rows = box.height() + 2 * pad;
  const std::int64_t cols = box.width() + 2 * pad;
  const std::int64_t top = box.top - pad;
  const std::int64_t left = box.left - pad;
  std::vector<std::uint8_t> occ(static_cast<std::size_t>(rows * cols), 0);
  for (const auto& c : live) {
    occ[static_cast<std::size_t>((c.row - top) * cols + (c.col - left))] = 1;
  }
  std::vector<Cell> next;
  next.reserve(live.size() * 2);
  for (std::int64_t r = 1; r < rows - 1; ++r) {
    const std::uint8_t* up = &occ[static_cast<std::size_t>((r - 1) * cols)];
    const std::uint8_t* mid = up + cols;
    const std::uint8_t* down = mid + cols;
    for (std::int64_t c = 1; c < cols - 1; ++c) {
      const int n = up[c - 1] + up[c] + up[c + 1] + mid[c - 1] + mid[c + 1] + down[c - 1] +
                    down[c] + down[c + 1];
      if (next_state(mid[c] != 0, n)) next.push_back({r + top, c + left});
    }
  }
  return next;
}

// Torus of <= 32 cells packed into one word, for exhaustive predecessor
// search. Neighbour lists keep multiplicity so tiny tori match step().
class PackedTorus {
 public:
  explicit PackedTorus(const Grid& grid) : cells_(grid.width() * grid.height()) {
    const std::size_t w = grid.width();
    const std::size_t h = grid.height();
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < w; ++c) {
        auto& nb = neighbours_[r * w + c];
        std::size_t k = 0;
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const auto rr = wrap(static_cast<std::int64_t>(r) + dr, h);
            const auto cc = wrap(static_cast<std::int64_t>(c) + dc, w);
            nb[k++] = static_cast<std::uint8_t>(rr * static_cast<std::int64_t>(w) + cc);
          }
        }
        if (grid.alive(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c))) {
          target_ |= std::uint32_t{1} << (r * w + c);
        }
      }
    }
  }

  std::size_t cells() const { return cells_; }

  // True iff `candidate` steps to the target; bails on the first mismatch.
  bool maps_to_target(std::uint32_t candidate) const {
    for (std::size_t i = 0; i < cells_; ++i) {
      int n = 0;
      for (auto j : neighbours_[i]) n += static_cast<int>((candidate >> j) & 1u);
      const bool alive = ((candidate >> i) & 1u) != 0;
      const bool want = ((target_ >> i) & 1u) != 0;
      if (next_state(alive, n) != want) return false;
    }
    return true;
  }

 private:
  std::size_t cells_;
  std::array<std::array<std::uint8_t, 8>, 32> neighbours_{};
  std::uint32_t target_ = 0;
};

}  // namespace

Grid Grid::toroidal(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw Error(ErrorKind::kDomain, "torus dimensions must be >= 1");
  Grid g;
  g.boundary_ = Boundary::kToroidal;
  g.width_ = width;
  g.height_ = height;
  g.dense_.assign(width * height, 0);
  return g;
}

Grid Grid::unbounded(std::vector<Cell> live) {
  Grid g;
  g.boundary_ = Boundary::kUnbounded;
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  g.live_ = std::move(live);
  return g;
}

std::size_t Grid::width() const noexcept {
  return is_toroidal() ? width_ : static_cast<std::size_t>(bounds().width());
}

std::size_t Grid::height() const noexcept {
  return is_toroidal() ? height_ : static_cast<std::size_t>(bounds().height());
}

bool Grid::alive(std::int64_t row, std::int64_t col) const {
  if (is_toroidal()) {
    return dense_[static_cast<std::size_t>(wrap(row, height_)) * width_ +
                  static_cast<std::size_t>(wrap(col, width_))] != 0;
  }
  return std::binary_search(live_.begin(), live_.end(), Cell{row, col});
}

void Grid::set(std::int64_t row, std::int64_t col, bool alive) {
  if (is_toroidal()) {
    dense_[static_cast<std::size_t>(wrap(row, height_)) * width_ +
           static_cast<std::size_t>(wrap(col, width_))] = alive ? 1 : 0;
    return;
  }
  const Cell cell{row, col};
  auto it = std::lower_bound(live_.begin(), live_.end(), cell);
  const bool present = it != live_.end() && *it == cell;
  if (alive && !present) live_.insert(it, cell);
  if (!alive && present) live_.erase(it);
}

std::size_t Grid::population() const noexcept {
  if (is_toroidal()) return static_cast<std::size_t>(std::count(dense_.begin(), dense_.end(), 1));
  return live_.size();
}

std::vector<Cell> Grid::live_cells() const {
  if (!is_toroidal()) return live_;
  std::vector<Cell> out;
  for (std::size_t i = 0; i < dense_.size(); ++i) {
    if (dense_[i] != 0) {
      out.push_back({static_cast<std::int64_t>(i / width_), static_cast<std::int64_t>(i % width_)});
    }
  }
  return out;
}

BoundingBox Grid::bounds() const {
  const auto cells = live_cells();
  if (cells.empty()) return {};
  BoundingBox box{cells.front().row, cells.front().col, cells.back().row, cells.front().col};
  for (const auto& c : cells) {
    box.left = std::min(box.left, c.col);
    box.right = std::max(box.right, c.col);
  }
  return box;
}

Grid Grid::shifted(std::int64_t drow, std::int64_t dcol) const {
  if (is_toroidal()) {
    Grid out = toroidal(width_, height_);
    for (const auto& c : live_cells()) out.set(c.row + drow, c.col + dcol);
    return out;
  }
  std::vector<Cell> moved;
  moved.reserve(live_.size());
  for (const auto& c : live_) moved.push_back({c.row + drow, c.col + dcol});
  return unbounded(std::move(moved));
}

Grid step(const Grid& grid) {
  if (grid.is_toroidal()) return step_torus(grid);
  Grid out;
  out.boundary_ = Boundary::kUnbounded;
  out.live_ = step_unbounded(grid.live_, grid.bounds());
  return out;
}

Grid run(const Grid& grid, std::size_t steps) {
  Grid g = grid;
  for (std::size_t i = 0; i < steps; ++i) g = step(g);
  return g;
}

std::vector<std::size_t> population_series(const Grid& grid, std::size_t steps) {
  std::vector<std::size_t> pops;
  pops.reserve(steps + 1);
  Grid g = grid;
  pops.push_back(g.population());
  for (std::size_t i = 0; i < steps; ++i) {
    g = step(g);
    pops.push_back(g.population());
  }
  return pops;
}

bool is_garden_of_eden(const Grid& grid) {
  if (!grid.is_toroidal()) {
    throw Error(ErrorKind::kUnsupported, "Garden-of-Eden search needs a toroidal grid");
  }
  const std::size_t n = grid.width() * grid.height();
  if (n > kMaxEdenCells) {
    throw Error(ErrorKind::kCapacity, "Garden-of-Eden search is limited to " +
                                          std::to_string(kMaxEdenCells) + " cells, grid has " +
                                          std::to_string(n));
  }
  const PackedTorus torus(grid);
  const std::uint64_t total = std::uint64_t{1} << n;

  // Small spaces are not worth the thread start-up.
  const unsigned workers =
      total < (1u << 16) ? 1u : std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
  std::atomic<bool> found{false};
  auto search = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t c = begin; c < end; ++c) {
      if ((c & 0xFFFu) == 0 && found.load(std::memory_order_relaxed)) return;
      if (torus.maps_to_target(static_cast<std::uint32_t>(c))) {
        found.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  if (workers == 1) {
    search(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(search, begin, end);
    }
  }
  return !found.load();
}

const char* to_string(GrowthClass::Kind kind) {
  switch (kind) {
    case GrowthClass::Kind::kBounded: return "bounded";
    case GrowthClass::Kind::kLinear: return "linear";
    case GrowthClass::Kind::kQuadratic: return "quadratic";
  }
  return "unknown";
}

GrowthClass growth_class(const Grid& pattern, std::size_t horizon) {
  if (pattern.is_toroidal()) {
    throw Error(ErrorKind::kUnsupported, "growth classification needs an unbounded grid");
  }
  if (horizon < kMinGrowthHorizon) {
    throw Error(ErrorKind::kDomain,
                "growth horizon must be at least " + std::to_string(kMinGrowthHorizon));
  }
  const auto pops = population_series(pattern, horizon);
  const std::size_t first = std::max<std::size_t>(1, horizon / 2);
  if (std::any_of(pops.begin() + static_cast<std::ptrdiff_t>(first), pops.end(),
                  [](std::size_t p) { return p == 0; })) {
    return {GrowthClass::Kind::kBounded, 0.0};
  }

  // Ordinary least squares slope of log(pop) on log(step).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(horizon - first + 1);
  for (std::size_t s = first; s <= horizon; ++s) {
    const double x = std::log(static_cast<double>(s));
    const double y = std::log(static_cast<double>(pops[s]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);

  GrowthClass out{GrowthClass::Kind::kBounded, slope};
  if (slope < 0.3) return out;
  if (slope >= 0.7 && slope <= 1.3) {
    out.kind = GrowthClass::Kind::kLinear;
    return out;
  }
  if (slope >= 1.7 && slope <= 2.3) {
    out.kind = GrowthClass::Kind::kQuadratic;
    return out;
  }
  throw Error(ErrorKind::kUnclassified,
              "population growth exponent " + std::to_string(slope) + " fits no growth class");
}

}  // namespace noosphere
