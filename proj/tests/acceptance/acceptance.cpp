// Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
// exits non-zero if any fails. `acceptance N` runs only criterion N.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "noocli/scenario.hpp"
#include "noosphere/dna.hpp"
#include "noosphere/lifeca.hpp"
#include "noosphere/ncomp.hpp"
#include "noosphere/noosim.hpp"
#include "noosphere/pattern_io.hpp"
#include "oracles.hpp"

namespace {

namespace ns = noosphere;
using noocli::RunConfig;
using noocli::Scenario;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-checks; the first failing one names the criterion's failure.
class Checks {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      failure_ = what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    return {pass_, pass_ ? notes_ : failure_ + (notes_.empty() ? "" : " [" + notes_ + "]")};
  }

 private:
  bool pass_ = true;
  std::string failure_;
  std::string notes_;
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> local_maxima(const std::vector<double>& y) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) out.push_back(y[i]);
  }
  return out;
}

ns::Trajectory scenario(Scenario s, std::optional<std::size_t> substeps = std::nullopt) {
  RunConfig c;
  c.scenario = s;
  c.substeps = substeps;
  return noocli::run_scenario(c);
}

// 1. Textbook mode: information at 2045.
Outcome textbook_2045() {
  Checks c;
  const ns::ExponentialParams p{std::numbers::ln2, 1000.0, 2013};
  const double closed = ns::exp_info(p, 32.0);
  c.require(rel(closed, 4.295e12) < 1e-3, "exp_info(32) = " + fmt(closed) + " not within 0.1%");

  RunConfig cfg;
  cfg.t_end = 32.0;
  const auto traj = noocli::run_scenario(cfg);
  const double integrated = traj.back().state[0];
  c.require(rel(integrated, 4.295e12) < 1e-3, "RK4 endpoint " + fmt(integrated) + " not within 0.1%");
  c.note("closed form " + fmt(closed, 7) + " EB, RK4 " + fmt(integrated, 7) + " EB");
  return c.outcome();
}

// 2. Energy accounting anchors.
Outcome energy_anchors() {
  Checks c;
  struct Anchor {
    int year;
    double plants, percent;
  };
  const std::array anchors{Anchor{2013, 30, 2}, Anchor{2045, 990, 66}, Anchor{2062, 1500, 100}};
  // Oracle first: thirty plants per doubling, one doubling per year, must
  // reproduce the anchors before the engine is consulted.
  for (const auto& a : anchors) {
    const double doublings = a.year - 2013;
    c.require(30.0 * (1.0 + doublings) == a.plants && a.plants / 15.0 == a.percent,
              "coupling oracle misses anchor " + std::to_string(a.year));
  }
  const ns::ExponentialParams p{std::numbers::ln2, 1000.0, 2013};
  const ns::EnergyModel energy;
  for (const auto& a : anchors) {
    const auto d = ns::plants_required(ns::exp_info(p, a.year - 2013), energy, p);
    c.require(d.plants == a.plants && d.percent == a.percent,
              std::to_string(a.year) + ": " + fmt(d.plants, 17) + " plants / " +
                  fmt(d.percent, 17) + "%");
  }
  const auto report = ns::singularity_report(p, energy, 60);
  c.require(report.collapse_year == 2062, "collapse year is not 2062");
  c.note("30/2% @2013, 990/66% @2045, 1500/100% @2062, collapse " +
         (report.collapse_year ? std::to_string(*report.collapse_year) : "none"));
  return c.outcome();
}

// 3. Appendix mode endpoint.
Outcome appendix_endpoint() {
  Checks c;
  RunConfig cfg;
  cfg.mode = noocli::Mode::kAppendix;
  const auto traj = noocli::run_scenario(cfg);
  const double closed = 1000.0 * std::exp(34.0);
  const double end = traj.back().state[0];
  c.require(traj.back().t == 17.0, "grid does not end at t = 17");
  c.require(rel(end, closed) < 1e-3, "endpoint " + fmt(end) + " vs closed form " + fmt(closed));
  c.require(end >= 1e17 && end < 1e18, "endpoint is not of order 1e17");
  c.note("endpoint " + fmt(end, 7) + " EB, rel. error " + fmt(rel(end, closed), 2));
  return c.outcome();
}

double invariant_drift(const ns::Trajectory& traj, const ns::LotkaVolterraParams& p) {
  const double h0 = ns::lv_invariant(p, traj.front().state[0], traj.front().state[1]);
  double worst = 0;
  for (const auto& s : traj.samples()) {
    worst = std::max(worst, std::abs(ns::lv_invariant(p, s.state[0], s.state[1]) - h0));
  }
  return worst / std::abs(h0);
}

// 4. Scenario 2 conservation.
Outcome scenario2_conservation() {
  Checks c;
  const ns::LotkaVolterraParams p{1, 10, 1, 0};
  const auto base = scenario(Scenario::kLotkaVolterra, 100);   // internal step 1e-4
  const auto half = scenario(Scenario::kLotkaVolterra, 200);   // internal step 5e-5
  const double d1 = invariant_drift(base, p);
  const double d2 = invariant_drift(half, p);
  c.require(base.size() == 10001 && base.back().t == 100.0, "unexpected sampling grid");
  c.require(d1 < 1e-3, "relative H drift " + fmt(d1) + " >= 1e-3");
  c.require(d2 * 8.0 <= d1, "halving the step reduced drift only " + fmt(d1 / d2, 3) + "x");
  bool positive = true;
  for (const auto& s : base.samples()) positive = positive && s.state[0] > 0 && s.state[1] > 0;
  c.require(positive, "non-positive sample");
  c.note("drift " + fmt(d1, 3) + " -> " + fmt(d2, 3) + " (" + fmt(d1 / d2, 3) + "x)");
  return c.outcome();
}

// 5. Scenario 3 equilibrium and damping.
Outcome scenario3_damping() {
  Checks c;
  const ns::LotkaVolterraParams p{1, 10, 1, 0.01};
  const auto [e1, e2] = ns::lv_equilibrium(p);
  std::array<double, 2> y{e1, e2}, d{1, 1};
  ns::lv_rhs(p)(0.0, y, d);
  c.require(e1 == 10.0 && std::abs(e2 - 0.9) < 1e-15, "equilibrium is not (10, 0.9)");
  c.require(d[0] == 0.0 && d[1] == 0.0, "field at equilibrium is (" + fmt(d[0], 3) + ", " +
                                            fmt(d[1], 3) + ")");
  const auto traj = scenario(Scenario::kDepletion);
  const auto maxima = local_maxima(traj.column(0));
  c.require(maxima.size() >= 3, "fewer than three maxima of y1");
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    c.require(maxima[i] < maxima[i - 1], "maximum " + std::to_string(i) + " does not decrease");
  }
  c.note(std::to_string(maxima.size()) + " maxima, " + fmt(maxima.front(), 4) + " -> " +
         fmt(maxima.back(), 4));
  return c.outcome();
}

// 6. Energy-paradigm fixed point.
Outcome paradigm_fixed_point() {
  Checks c;
  const ns::EnergyParadigmParams p{2.0, 0.5, 100.0};
  const double star = ns::paradigm_fixed_point(p);
  const double mapped = ns::paradigm_step(p, star);
  c.require(star == 100.0, "fixed point " + fmt(star, 17));
  c.require(std::abs(mapped - star) <= std::numeric_limits<double>::epsilon() * star,
            "map(y*) - y* = " + fmt(mapped - star, 3));
  const auto traj = ns::iterate_map(ns::paradigm_map(p), ns::StateVector{{"y1"}, {10.0}}, 100);
  std::size_t first = traj.size();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (std::abs(traj[i].state[0] - star) < 1e-9) {
      first = i;
      break;
    }
  }
  c.require(first < traj.size(), "no convergence within 100 steps");
  for (std::size_t i = first; i < traj.size(); ++i) {
    c.require(std::abs(traj[i].state[0] - star) < 1e-9, "orbit leaves the 1e-9 band");
  }
  c.note("y* = 100, within 1e-9 after " + std::to_string(first) + " steps");
  return c.outcome();
}

// 7. DNA codec.
Outcome dna_codec() {
  Checks c;
  c.require(ns::to_string(ns::dna_to_binary(ns::DnaStrand::parse("TATAGCCG"))) == "10101001",
            "TATAGCCG does not decode to 10101001");
  std::mt19937_64 rng(20131);
  for (int i = 0; i < 1000; ++i) {
    ns::Bits bits(rng() % 256);
    for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = (rng() & 1u) != 0;
    c.require(ns::dna_to_binary(ns::binary_to_dna(bits)) == bits, "canonical roundtrip failed");
    c.require(ns::dna_to_binary(ns::binary_to_dna(bits, ns::Randomized{rng()})) == bits,
              "randomized roundtrip failed");
  }
  c.note("TATAGCCG -> 10101001; 1000 vectors x 2 styles roundtrip");
  return c.outcome();
}

// 8. Life engine.
Outcome life_engine() {
  Checks c;
  ns::Grid blinker = ns::Grid::toroidal(5, 5);
  for (int r = 1; r <= 3; ++r) blinker.set(r, 2);
  c.require(ns::step(blinker) != blinker && ns::run(blinker, 2) == blinker, "blinker period != 2");

  ns::Grid block = ns::Grid::toroidal(6, 6);
  for (auto [r, col] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) block.set(r, col);
  c.require(ns::step(block) == block, "block is not a still life");

  const ns::Grid glider = ns::Grid::unbounded({{0, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  ns::Grid g = glider;
  for (int k = 1; k <= 25; ++k) {
    g = ns::run(g, 4);
    c.require(g == glider.shifted(k, k), "glider off course after " + std::to_string(4 * k));
  }

  const ns::Grid max =
      ns::read_pattern_file(NOOSPHERE_DATA_DIR "/patterns/max.txt", ns::Boundary::kUnbounded);
  for (std::size_t horizon : {256u, 512u}) {
    const auto growth = ns::growth_class(max, horizon);
    c.require(growth.kind == ns::GrowthClass::Kind::kQuadratic && growth.fit_exponent >= 1.7 &&
                  growth.fit_exponent <= 2.3,
              "spacefiller exponent " + fmt(growth.fit_exponent, 4) + " at horizon " +
                  std::to_string(horizon));
    c.note("Max exponent " + fmt(growth.fit_exponent, 4) + " @" + std::to_string(horizon));
  }
  return c.outcome();
}

// 9. Garden-of-Eden oracle on the 3x3 torus.
Outcome garden_of_eden() {
  Checks c;
  const auto image = oracle::forward_images(3, 3);
  std::size_t orphans = 0;
  for (std::uint32_t m = 0; m < 512; ++m) {
    ns::Grid g = ns::Grid::toroidal(3, 3);
    for (int i = 0; i < 9; ++i) {
      if ((m >> i) & 1u) g.set(i / 3, i % 3);
    }
    const bool goe = ns::is_garden_of_eden(g);
    c.require(goe == !image[m], "disagreement on grid " + std::to_string(m));
    orphans += goe ? 1 : 0;
  }
  c.note("512/512 agree, " + std::to_string(orphans) + " orphans");
  return c.outcome();
}

// 10. VM integration.
Outcome vm_integration() {
  Checks c;
  std::mt19937_64 rng(5);
  ns::Bits in(ns::kPayloadBases);
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = (rng() & 1u) != 0;
  ns::NComputer idle(0, ns::DnaMemory{}, {"AX", "BX"}, ns::kPayloadBases, {12, 8, 0});
  idle.set_register("AX", in);
  c.require(idle.alu_execute("AX") == in, "steps = 0 is not the identity");

  ns::NComputer osc(0, ns::DnaMemory{}, {"AX", "BX"}, 25, {5, 5, 2});
  ns::Bits blinker(25, false);
  blinker[7] = blinker[12] = blinker[17] = true;
  osc.set_register("AX", blinker);
  c.require(osc.alu_execute("AX") == blinker, "blinker register does not return after 2 steps");

  ns::DnaMemory memory = ns::DnaMemory{};
  ns::Bits seed(ns::kPayloadBases, true);
  memory.write(ns::kDefaultReplicationSegment.first, seed, ns::Access::kUnlocked);
  memory.write(5, in);
  const ns::DnaMemory founder_memory = memory;

  const double scale = 10.0;
  const auto drive = scenario(Scenario::kLotkaVolterra);
  ns::Colony colony(ns::LotkaVolterraParams{1, 10, 1, 0}, scale);
  colony.add(ns::NComputer(0, memory, {"AX", "BX"}, ns::kPayloadBases, {12, 8, 2}));

  std::size_t tracked = 0, spawned = 0;
  for (const auto& s : drive.samples()) {
    const double y2 = s.state[1];
    const auto want = static_cast<std::size_t>(std::round(scale * y2));
    try {
      for (const auto& e : colony.reconcile(y2)) {
        spawned += e.kind == ns::ColonyEvent::Kind::kSpawn ? 1 : 0;
      }
    } catch (const ns::Error& e) {
      c.require(false, "sample t=" + fmt(s.t, 4) + " (y2=" + fmt(y2, 3) + ", target " +
                           std::to_string(want) + "): " + std::string(ns::to_string(e.kind())) +
                           " error; tracked " + std::to_string(tracked) + "/" +
                           std::to_string(drive.size()) + " samples");
      break;
    }
    c.require(colony.alive_count() == want, "colony size differs from target at t=" + fmt(s.t));
    for (const auto& [id, m] : colony.machines()) {
      c.require(m.memory() == founder_memory, "machine " + std::to_string(id) + " memory differs");
    }
    ++tracked;
  }
  c.note("alu identity and blinker ok; " + std::to_string(spawned) + " spawns");
  return c.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "textbook scenario 1 at 2045", 1, textbook_2045},
      {2, "energy accounting anchors", 1, energy_anchors},
      {3, "appendix scenario 1 endpoint", 1, appendix_endpoint},
      {4, "scenario 2 conservation", 60, scenario2_conservation},
      {5, "scenario 3 equilibrium and damping", 60, scenario3_damping},
      {6, "energy-paradigm fixed point", 60, paradigm_fixed_point},
      {7, "DNA codec", 1, dna_codec},
      {8, "Life engine", 30, life_engine},
      {9, "Garden-of-Eden oracle", 30, garden_of_eden},
      {10, "VM integration", 60, vm_integration},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& cr : criteria) {
    if (only != 0 && cr.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= cr.budget_seconds) {
      o.pass = false;
      o.detail += " [runtime " + fmt(secs, 3) + " s exceeds " + fmt(cr.budget_seconds) + " s]";
    }
    std::printf("[%s] AC%-2d %-36s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
