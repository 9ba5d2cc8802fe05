#include "noocli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "noocli/output.hpp"
#include "noocli/scenario.hpp"
#include "noosphere/lifeca.hpp"
#include "noosphere/ncomp.hpp"
#include "noosphere/noosim.hpp"
#include "noosphere/pattern_io.hpp"
#include "noosphere/strand_io.hpp"

namespace noocli {

namespace {

namespace ns = noosphere;

const std::map<std::string, Mode> kModes{{"textbook", Mode::kTextbook},
                                         {"appendix", Mode::kAppendix}};
const std::map<std::string, Scenario> kScenarios{{"1", Scenario::kExponential},
                                                 {"2", Scenario::kLotkaVolterra},
                                                 {"3", Scenario::kDepletion},
                                                 {"paradigm", Scenario::kParadigm}};

struct ParameterFlags {
  std::map<std::string, double> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App& app, const std::string& name, const std::string& help) {
    options[name] = app.add_option("--" + name, values[name], help);
  }

  std::map<std::string, double> given() const {
    std::map<std::string, double> out;
    for (const auto& [name, opt] : options) {
      if (opt->count() > 0) out[name] = values.at(name);
    }
    return out;
  }
};

void write_trajectory(const ns::Trajectory& traj, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_csv(out, traj);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  write_csv(file, traj);
}

int cmd_scenario(RunConfig config, std::ostream& out, std::ostream& err) {
  try {
    const auto traj = run_scenario(config);
    write_trajectory(traj, config.csv_path, out);
    if (!config.csv_path.empty()) {
      out << "wrote " << traj.size() << " samples to " << config.csv_path << '\n';
    }
    return kExitOk;
  } catch (const ns::DivergedError& e) {
    write_trajectory(e.partial(), config.csv_path, out);
    err << "error: " << e.what() << " (partial trajectory of " << e.partial().size()
        << " samples written)\n";
    return kExitDiverged;
  }
}

int cmd_report(Mode mode, int horizon, const std::map<std::string, double>& overrides,
               std::ostream& out) {
  RunConfig config;
  config.mode = mode;
  config.overrides = overrides;
  const auto params = exponential_params(config);
  out << format_report(ns::singularity_report(params, ns::EnergyModel{}, horizon));
  return kExitOk;
}

struct LifeOptions {
  std::string pattern;
  std::size_t steps = 0;
  std::size_t horizon = 256;
  std::string boundary = "torus";
  bool goe = false;
  bool classify = false;
};

int cmd_life(const LifeOptions& opts, std::ostream& out) {
  const auto boundary = opts.boundary == "torus" ? ns::Boundary::kToroidal : ns::Boundary::kUnbounded;
  const ns::Grid initial = ns::read_pattern_file(opts.pattern, boundary);

  if (opts.goe) {
    out << (ns::is_garden_of_eden(initial) ? "Garden of Eden" : "not a Garden of Eden") << '\n';
  }

  const auto pops = ns::population_series(initial, opts.steps);
  const ns::Grid final_grid = ns::run(initial, opts.steps);
  out << "! generation " << opts.steps << '\n' << ns::format_pattern(final_grid);
  out << "step,population\n";
  for (std::size_t i = 0; i < pops.size(); ++i) out << i << ',' << pops[i] << '\n';

  if (opts.classify) {
    const auto unbounded = ns::read_pattern_file(opts.pattern, ns::Boundary::kUnbounded);
    const auto growth = ns::growth_class(unbounded, opts.horizon);
    out << "growth: " << ns::to_string(growth.kind) << " (exponent "
        << format_exact(growth.fit_exponent) << ", horizon " << opts.horizon << ")\n";
  }
  return kExitOk;
}

struct NcompOptions {
  std::string strands;
  double scale = 10.0;
  std::size_t alu_steps = 2;
  std::optional<ns::Address> address;
  double t_end = 100.0;
  double h = 0.01;
};

std::string hex(ns::Address a) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%05X", a);
  return buf;
}

int cmd_ncomp(const NcompOptions& opts, std::ostream& out) {
  ns::DnaMemory memory = ns::read_strand_file(opts.strands);
  const auto& segment = memory.replication_segment();
  out << "memory: " << memory.size() << " strands, " << memory.replication_strands()
      << " in replication segment [" << hex(segment.first) << ", " << hex(segment.last) << "]\n";

  ns::NComputer machine(0, std::move(memory), {"AX", "BX"}, ns::kPayloadBases,
                        ns::AluConfig{12, 8, opts.alu_steps});

  std::vector<ns::Address> data;
  for (auto a : machine.memory().addresses()) {
    if (!segment.contains(a)) data.push_back(a);
  }
  const std::optional<ns::Address> source =
      opts.address ? opts.address : (data.empty() ? std::nullopt : std::optional(data.front()));
  if (source) {
    machine.load_register("AX", *source);
    out << "load AX <- " << hex(*source) << ": " << ns::to_string(machine.reg("AX")) << '\n';
    const auto result = machine.alu_execute("AX");
    out << "alu AX (" << machine.alu().width << "x" << machine.alu().height << ", "
        << machine.alu().steps << " steps): " << ns::to_string(result) << '\n';
    ns::Address dest = *source + 1;
    while (machine.memory().contains(dest) || segment.contains(dest)) {
      dest = (dest + 1) % ns::kAddressLimit;
      if (dest == *source) throw ns::Error(ns::ErrorKind::kCapacity, "memory is full");
    }
    machine.store_register("AX", dest);
    out << "store AX -> " << hex(dest) << '\n';
  } else {
    out << "no data strands; ALU cycle skipped\n";
  }

  RunConfig drive;
  drive.scenario = Scenario::kLotkaVolterra;
  drive.t_end = opts.t_end;
  drive.h = opts.h;
  const auto traj = run_scenario(drive);

  ns::Colony colony(lv_params(drive), opts.scale);
  colony.add(std::move(machine));
  out << "colony: scale " << format_exact(opts.scale) << ", driven by scenario 2 over t in [0, "
      << format_exact(opts.t_end) << "]\n";
  for (const auto& s : traj.samples()) {
    std::vector<ns::ColonyEvent> events;
    try {
      events = colony.reconcile(s.state[1]);
    } catch (const ns::Error&) {
      out << "t=" << format_exact(s.t) << " reconcile failed, colony size "
          << colony.alive_count() << '\n';
      throw;
    }
    for (const auto& e : events) {
      out << "t=" << format_exact(s.t);
      if (e.kind == ns::ColonyEvent::Kind::kSpawn) {
        out << " spawn " << e.machine << " from " << *e.parent << '\n';
      } else {
        out << " kill " << e.machine << '\n';
      }
    }
    if (!events.empty()) {
      out << "t=" << format_exact(s.t) << " colony size " << colony.alive_count() << '\n';
    }
  }
  out << "final colony size: " << colony.alive_count() << '\n';
  return kExitOk;
}

// Fills options not given on the command line from a key=value file.
void apply_config(CLI::App& sub, const std::string& path) {
  for (const auto& item : CLI::ConfigTOML().from_file(path)) {
    if (!item.parents.empty()) throw UsageError("config sections are not supported: " + path);
    CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config") {
      throw UsageError("unknown config key '" + item.name + "' in " + path);
    }
    if (opt->count() == 0) {
      opt->add_result(item.inputs);
      opt->run_callback();
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noosphere energy-dynamics simulator and N-computer toy VM", "noocli"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // scenario
  auto* scen = app.add_subcommand("scenario", "Integrate a model scenario and emit CSV");
  std::string scen_config;
  scen->add_option("--config", scen_config, "key=value file with option defaults");
  RunConfig run;
  ParameterFlags scen_params;
  std::string scenario_name = "1";
  double t_end = 0, h = 0;
  std::size_t substeps_v = 0, steps_v = 0;
  scen->add_option("--scenario", scenario_name, "1 | 2 | 3 | paradigm")
      ->check(CLI::IsMember({"1", "2", "3", "paradigm"}));
  scen->add_option("--mode", run.mode, "textbook | appendix")
      ->transform(CLI::CheckedTransformer(kModes));
  for (const char* p : {"k1", "k2", "k3", "k4", "eps", "alpha", "A"}) {
    scen_params.add(*scen, p, std::string("override model parameter ") + p);
  }
  auto* t_end_opt = scen->add_option("--t-end", t_end, "end of the time grid");
  auto* h_opt = scen->add_option("--h", h, "sampling step");
  auto* sub_opt = scen->add_option("--substeps", substeps_v, "internal RK4 steps per sample")
                      ->check(CLI::PositiveNumber);
  auto* steps_opt = scen->add_option("--steps", steps_v, "paradigm map iterations");
  scen->add_option("--csv", run.csv_path, "write CSV here instead of standard output");
  auto finish_scenario = [&] {
    if (!scen_config.empty()) apply_config(*scen, scen_config);
    run.scenario = kScenarios.at(scenario_name);
    run.overrides = scen_params.given();
    if (t_end_opt->count()) run.t_end = t_end;
    if (h_opt->count()) run.h = h;
    if (sub_opt->count()) run.substeps = substeps_v;
    if (steps_opt->count()) run.steps = steps_v;
    return cmd_scenario(run, out, err);
  };

  // report
  auto* rep = app.add_subcommand("report", "Print the singularity report");
  std::string rep_config;
  rep->add_option("--config", rep_config, "key=value file with option defaults");
  Mode report_mode = Mode::kTextbook;
  int horizon = 60;
  ParameterFlags rep_params;
  rep->add_option("--mode", report_mode, "textbook | appendix")
      ->transform(CLI::CheckedTransformer(kModes));
  rep->add_option("--horizon", horizon, "years after the base year")->check(CLI::PositiveNumber);
  rep_params.add(*rep, "k1", "override the growth rate");
  auto finish_report = [&] {
    if (!rep_config.empty()) apply_config(*rep, rep_config);
    return cmd_report(report_mode, horizon, rep_params.given(), out);
  };

  // life
  auto* life = app.add_subcommand("life", "Run a Game of Life pattern file");
  LifeOptions life_opts;
  life->add_option("pattern", life_opts.pattern, "pattern file ('.' dead, '#' alive)")
      ->required();
  life->add_option("--steps", life_opts.steps, "generations to run");
  life->add_option("--boundary", life_opts.boundary, "torus | unbounded")
      ->check(CLI::IsMember({"torus", "unbounded"}));
  life->add_flag("--goe", life_opts.goe, "decide whether the pattern is a Garden of Eden");
  life->add_flag("--classify", life_opts.classify, "classify the population growth rate");
  life->add_option("--horizon", life_opts.horizon, "generations used by --classify")
      ->check(CLI::Range(std::size_t{ns::kMinGrowthHorizon}, std::size_t{1} << 20));


  // ncomp
  auto* nc = app.add_subcommand("ncomp", "Run the N-computer demo on a strand file");
  NcompOptions nc_opts;
  ns::Address nc_address = 0;
  nc->add_option("strands", nc_opts.strands, "strand file (115 bases per line)")->required();
  nc->add_option("--scale", nc_opts.scale, "machines per unit of y2")->check(CLI::PositiveNumber);
  nc->add_option("--steps", nc_opts.alu_steps, "ALU generations per execution");
  auto* addr_opt = nc->add_option("--address", nc_address, "address to load into AX")
                       ->check(CLI::Range(ns::Address{0}, ns::kAddressLimit - 1));
  nc->add_option("--t-end", nc_opts.t_end, "end of the scenario 2 drive");
  nc->add_option("--h", nc_opts.h, "sampling step of the drive");
  auto finish_ncomp = [&] {
    if (addr_opt->count()) nc_opts.address = nc_address;
    return cmd_ncomp(nc_opts, out);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (scen->parsed()) return finish_scenario();
    if (rep->parsed()) return finish_report();
    if (life->parsed()) return cmd_life(life_opts, out);
    return finish_ncomp();
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ns::DivergedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const ns::Error& e) {
    err << "error (" << ns::to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ns::ErrorKind::kDiverged ? kExitDiverged : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace noocli
