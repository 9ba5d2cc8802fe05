#include <random>

#include "doctest.h"
#include "noosphere/lifeca.hpp"
#include "noosphere/pattern_io.hpp"
#include "oracles.hpp"

using namespace noosphere;

namespace {

Grid torus_from(const std::vector<int>& cells, int w, int h) {
  Grid g = Grid::toroidal(static_cast<std::size_t>(w), static_cast<std::size_t>(h));
  for (int i = 0; i < w * h; ++i) {
    if (cells[static_cast<std::size_t>(i)]) g.set(i / w, i % w);
  }
  return g;
}

std::vector<int> cells_of(const Grid& g) {
  std::vector<int> out(g.width() * g.height(), 0);
  for (const auto& c : g.live_cells()) {
    out[static_cast<std::size_t>(c.row) * g.width() + static_cast<std::size_t>(c.col)] = 1;
  }
  return out;
}

Grid blinker_vertical() {
  Grid g = Grid::toroidal(5, 5);
  g.set(1, 2);
  g.set(2, 2);
  g.set(3, 2);
  return g;
}

Grid glider() {
  return Grid::unbounded({{0, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
}

}  // namespace

TEST_CASE("empty grid stays empty") {
  CHECK(step(Grid::toroidal(4, 4)).population() == 0);
  CHECK(step(Grid::unbounded()).population() == 0);
}

TEST_CASE("blinker oscillates with period 2") {
  const Grid v = blinker_vertical();
  Grid h = Grid::toroidal(5, 5);
  h.set(2, 1);
  h.set(2, 2);
  h.set(2, 3);
  CHECK(step(v) == h);
  CHECK(step(h) == v);
  CHECK(run(v, 2) == v);
}

TEST_CASE("block is a still life") {
  Grid b = Grid::toroidal(5, 5);
  for (auto [r, c] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) b.set(r, c);
  CHECK(step(b) == b);
}

TEST_CASE("run with zero steps is the identity") {
  const Grid g = glider();
  CHECK(run(g, 0) == g);
  CHECK(run(blinker_vertical(), 0) == blinker_vertical());
}

TEST_CASE("glider translates by (1, 1) every four generations") {
  Grid g = glider();
  for (int k = 1; k <= 10; ++k) {
    g = run(g, 4);
    CHECK(g == glider().shifted(k, k));
  }
}

TEST_CASE("step does not mutate its input") {
  const Grid g = glider();
  const Grid copy = g;
  (void)step(g);
  CHECK(g == copy);
}

TEST_CASE("toroidal step agrees with the reference on random grids") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 9);
    const int h = 1 + static_cast<int>(rng() % 9);
    std::vector<int> cells(static_cast<std::size_t>(w * h));
    for (auto& c : cells) c = static_cast<int>(rng() & 1u);
    CAPTURE(w);
    CAPTURE(h);
    CHECK(cells_of(step(torus_from(cells, w, h))) == oracle::life_step(cells, w, h));
  }
}

TEST_CASE("toroidal step commutes with cyclic shifts") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Grid g = Grid::toroidal(7, 6);
    for (int i = 0; i < 42; ++i) {
      if (rng() & 1u) g.set(i / 7, i % 7);
    }
    const auto dr = static_cast<std::int64_t>(rng() % 6);
    const auto dc = static_cast<std::int64_t>(rng() % 7);
    CHECK(step(g.shifted(dr, dc)) == step(g).shifted(dr, dc));
  }
}

TEST_CASE("torus and unbounded runs agree away from the boundary") {
  // A glider in the middle of a 24x24 torus for 20 generations never wraps.
  Grid torus = Grid::toroidal(24, 24);
  for (const auto& c : glider().live_cells()) torus.set(c.row + 4, c.col + 4);
  Grid free = glider().shifted(4, 4);
  for (int i = 0; i < 20; ++i) {
    torus = step(torus);
    free = step(free);
    CHECK(torus.live_cells() == free.live_cells());
  }
  // R-pentomino, 30 generations inside a 64x64 torus.
  const Grid r = Grid::unbounded({{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 1}}).shifted(30, 30);
  Grid rt = Grid::toroidal(64, 64);
  for (const auto& c : r.live_cells()) rt.set(c.row, c.col);
  const Grid a = run(rt, 30);
  const Grid b = run(r, 30);
  REQUIRE(b.bounds().top > 0);
  REQUIRE(b.bounds().bottom < 63);
  CHECK(a.live_cells() == b.live_cells());
}

TEST_CASE("sparse and dense unbounded stepping agree") {
  // Two blocks far apart force the sort-based path; compare with each block alone.
  const Grid block = Grid::unbounded({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const Grid r = Grid::unbounded({{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 1}});
  std::vector<Cell> both = r.live_cells();
  for (const auto& c : block.live_cells()) both.push_back({c.row + 100000, c.col - 100000});
  Grid far = Grid::unbounded(both);
  Grid near = r;
  for (int i = 0; i < 40; ++i) {
    far = step(far);
    near = step(near);
  }
  std::vector<Cell> expected = near.live_cells();
  for (const auto& c : block.live_cells()) expected.push_back({c.row + 100000, c.col - 100000});
  CHECK(far == Grid::unbounded(expected));
}

TEST_CASE("population series") {
  const auto pops = population_series(glider(), 8);
  CHECK(pops == std::vector<std::size_t>(9, 5));
}

TEST_CASE("Garden of Eden on the 3x3 torus") {
  CHECK_FALSE(is_garden_of_eden(Grid::toroidal(3, 3)));
  Grid full = Grid::toroidal(3, 3);
  for (int i = 0; i < 9; ++i) full.set(i / 3, i % 3);
  // Golden value from an independent census: any 3-cell grid steps to it.
  CHECK_FALSE(is_garden_of_eden(full));
}

TEST_CASE("Garden of Eden agrees with the forward-image census (3x3)") {
  const auto image = oracle::forward_images(3, 3);
  std::size_t orphans = 0;
  for (std::uint32_t m = 0; m < 512; ++m) {
    const bool goe = is_garden_of_eden(torus_from(oracle::unpack(m, 9), 3, 3));
    CHECK(goe == !image[m]);
    orphans += goe ? 1 : 0;
  }
  CHECK(orphans == 384);  // frozen from the census
}

TEST_CASE("Garden of Eden agrees with the census on non-square and tiny tori") {
  for (auto [w, h] : {std::pair{4, 3}, {2, 5}, {1, 4}, {4, 4}}) {
    const auto image = oracle::forward_images(w, h);
    for (std::uint32_t m = 0; m < image.size(); m += 7) {
      CHECK(is_garden_of_eden(torus_from(oracle::unpack(m, w * h), w, h)) == !image[m]);
    }
  }
}

TEST_CASE("successors are never orphans") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Grid g = Grid::toroidal(4, 5);
    for (int i = 0; i < 20; ++i) {
      if (rng() & 1u) g.set(i / 4, i % 4);
    }
    CHECK_FALSE(is_garden_of_eden(step(g)));
  }
}

TEST_CASE("Garden of Eden search limits") {
  try {
    is_garden_of_eden(Grid::toroidal(5, 5));
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapacity);
  }
  try {
    is_garden_of_eden(glider());
    FAIL("expected unsupported error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnsupported);
  }
}

TEST_CASE("Garden of Eden at the 24-cell ceiling") {
  // 6x4 = 24 cells is the largest searchable torus.
  Grid g = Grid::toroidal(6, 4);
  g.set(0, 0);
  g.set(0, 1);
  g.set(1, 0);
  g.set(1, 1);
  CHECK_FALSE(is_garden_of_eden(g));  // a block is its own predecessor
}

TEST_CASE("growth classification") {
  CHECK(growth_class(Grid::unbounded({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 64).kind ==
        GrowthClass::Kind::kBounded);
  const auto g = growth_class(glider(), 128);
  CHECK(g.kind == GrowthClass::Kind::kBounded);
  CHECK(g.fit_exponent == doctest::Approx(0.0).epsilon(1e-12));
  const auto dead = growth_class(Grid::unbounded({{0, 0}}), 64);
  CHECK(dead.kind == GrowthClass::Kind::kBounded);
  CHECK(dead.fit_exponent == 0.0);
  CHECK_THROWS_AS(growth_class(glider(), 63), Error);
  CHECK_THROWS_AS(growth_class(Grid::toroidal(4, 4), 64), Error);
}

TEST_CASE("a glider gun grows linearly") {
  // Gosper glider gun: one glider every 30 generations.
  const Grid gun = parse_pattern(
      "........................#...........\n"
      "......................#.#...........\n"
      "............##......##............##\n"
      "...........#...#....##............##\n"
      "##........#.....#...##..............\n"
      "##........#...#.##....#.#...........\n"
      "..........#.....#.......#...........\n"
      "...........#...#....................\n"
      "............##......................\n",
      Boundary::kUnbounded);
  CHECK(gun.population() == 36);
  const auto g = growth_class(gun, 2000);
  CHECK(g.kind == GrowthClass::Kind::kLinear);
}

TEST_CASE("bundled spacefiller grows quadratically") {
  const Grid max = read_pattern_file(NOOSPHERE_DATA_DIR "/patterns/max.txt", Boundary::kUnbounded);
  CHECK(max.population() == 187);
  const auto g = growth_class(max, 256);
  CHECK(g.kind == GrowthClass::Kind::kQuadratic);
  CHECK(g.fit_exponent >= 1.7);
  CHECK(g.fit_exponent <= 2.3);
}
