// Command-line front end: simulate, fit-coil, compare, psychro, aggregate.
// Exit codes: 0 success, 1 validation error, 2 runtime error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "hpsim/coil.hpp"
#include "hpsim/error.hpp"
#include "hpsim/io.hpp"
#include "hpsim/psychro.hpp"
#include "hpsim/report.hpp"
#include "hpsim/simulator.hpp"

namespace fs = std::filesystem;
using namespace hpsim;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kRuntime = 2;

int run_simulate(const std::string& project_path, const io::Overrides& overrides,
                 const std::string& out_override, bool hourly) {
  auto project = io::load_project(project_path);
  io::apply_overrides(project, overrides);
  const auto weather = io::load_weather_csv(project.weather_file);
  const auto records = run_simulation(project.zone, project.hvac, weather, project.sim);

  fs::path out = out_override.empty()
                     ? project.output_dir / ("run_model" +
                                             std::to_string(static_cast<int>(project.hvac.model)) +
                                             ".csv")
                     : fs::path(out_override);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  io::write_records_csv(records, out);
  std::cout << "wrote " << records.size() << " records to " << out.string() << '\n';

  const auto agg = aggregate_hourly(records);
  const auto summary = summarize({hvac::to_string(project.hvac.model), agg.hours});
  std::printf("model %d (%s): dt = %d s, electric %.3f kWh, cooling %.3f kWh, %d cycles\n",
              static_cast<int>(project.hvac.model), summary.name.c_str(),
              effective_dt(project.hvac, project.sim), summary.electric_kwh, summary.cooling_kwh,
              summary.cycles);
  std::uint32_t warnings = 0;
  int flagged = 0;
  for (const auto& r : records) {
    warnings |= r.warnings;
    flagged += r.warnings != 0;
  }
  if (flagged) {
    std::fprintf(stderr, "warning: %d steps flagged (mask 0x%x: 1 h_ent clamp, 2 T_ext clamp, "
                 "4 dry coil, 8 humidity clamp)\n", flagged, warnings);
  }
  if (hourly) {
    fs::path hout = out;
    hout.replace_filename(out.stem().string() + "_hourly.csv");
    io::write_hourly_csv(agg.hours, hout);
    std::cout << "wrote " << agg.hours.size() << " hourly records to " << hout.string() << '\n';
  }
  return kOk;
}

int run_fit_coil(const std::string& table_path, const std::string& enthalpy) {
  const auto table = io::load_coil_table_csv(table_path);
  coil::FitOptions opts;
  opts.enthalpy = enthalpy == "table" ? coil::EnthalpySource::Table
                                      : coil::EnthalpySource::Psychrometric;
  const auto report = coil::fit_capacity_regression_report(table, opts);
  const auto& reg = report.regression;
  std::printf("enthalpy source: %s\n", enthalpy.c_str());
  std::printf("stage one (per outdoor temperature, kW vs kJ/kg):\n");
  std::printf("  %6s %10s %10s %10s %10s\n", "T_ext", "a0", "a1", "b0", "b1");
  for (const auto& s : report.stage_one) {
    std::printf("  %6.1f %10.6f %10.6f %10.6f %10.6f\n", s.t_ext, s.total.intercept,
                s.total.slope, s.sensible.intercept, s.sensible.slope);
  }
  std::printf("coefficients:\n");
  for (std::size_t i = 0; i < reg.c.size(); ++i) std::printf("  c%zu = %.10g\n", i + 1, reg.c[i]);
  std::printf("  p0 = %.10g kW\n  p1 = %.10g kW/K\n", reg.p0, reg.p1);
  std::printf("validity: T_ext [%.2f, %.2f] degC, h_ent [%.3f, %.3f] kJ/kg\n", reg.t_ext_range.lo,
              reg.t_ext_range.hi, reg.h_ent_range.lo, reg.h_ent_range.hi);
  std::printf("residuals:\n  %6s %6s %8s %8s %8s %8s %8s %8s %8s\n", "T_ext", "T_wb", "h_ent",
              "q_tot", "fit", "rel%", "q_sens", "fit", "rel%");
  for (const auto& r : report.residuals) {
    std::printf("  %6.1f %6.1f %8.3f %8.3f %8.3f %8.2f %8.3f %8.3f %8.2f\n", r.t_ext, r.t_wb,
                r.h_ent, r.q_tot, r.q_tot_fit, 100.0 * (r.q_tot_fit - r.q_tot) / r.q_tot,
                r.q_sens, r.q_sens_fit, 100.0 * (r.q_sens_fit - r.q_sens) / r.q_sens);
  }
  std::printf("max relative residual: q_tot %.3f %%, q_sens %.3f %%\n", 100.0 * report.max_rel_tot,
              100.0 * report.max_rel_sens);
  return kOk;
}

int run_compare(const std::vector<std::string>& files, std::vector<std::string> names) {
  std::vector<NamedRun> runs;
  for (std::size_t i = 0; i < files.size(); ++i) {
    int dropped = 0;
    auto hours = io::read_run_as_hourly(files[i], &dropped);
    if (dropped) std::fprintf(stderr, "warning: %s: dropped %d partial hours\n", files[i].c_str(), dropped);
    const std::string name = i < names.size() ? names[i] : fs::path(files[i]).stem().string();
    runs.push_back({name, std::move(hours)});
  }
  std::cout << format_report(compare_models(runs));
  return kOk;
}

int run_psychro(double t_db, double second, bool as_rh, double p_atm) {
  const double w = as_rh ? psychro::humidity_ratio_from_rh(t_db, second, p_atm)
                         : psychro::humidity_ratio_from_wetbulb(t_db, second, p_atm);
  std::printf("t_db      = %.3f degC\n", t_db);
  if (as_rh) {
    std::printf("rh        = %.4f\n", second);
  } else {
    std::printf("t_wb      = %.3f degC\n", second);
    std::printf("rh        = %.4f\n", psychro::relative_humidity(t_db, w, p_atm));
  }
  std::printf("p_ws      = %.5f kPa\n", psychro::saturation_vapor_pressure(t_db));
  std::printf("w         = %.6f kg/kg\n", w);
  std::printf("h         = %.3f kJ/kg\n", psychro::moist_air_enthalpy(t_db, w));
  std::printf("v         = %.5f m3/kg\n", psychro::specific_volume(t_db, w, p_atm));
  return kOk;
}

int run_aggregate(const std::string& in, const std::string& out) {
  const auto agg = aggregate_hourly(io::read_records_csv(in));
  if (agg.dropped_partial_hours) {
    std::fprintf(stderr, "warning: dropped %d partial hours\n", agg.dropped_partial_hours);
  }
  fs::path dest = out.empty() ? fs::path(in).replace_filename(fs::path(in).stem().string() + "_hourly.csv")
                              : fs::path(out);
  io::write_hourly_csv(agg.hours, dest);
  std::cout << "wrote " << agg.hours.size() << " hourly records to " << dest.string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hpsim - building zone and split-system heat pump simulation"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "run a project and write step records");
  std::string project_path, sim_out;
  io::Overrides overrides;
  int dt = 0, model = -1;
  double t_set = 0.0;
  bool hourly = false;
  sim->add_option("project", project_path, "project JSON file")->required()->check(CLI::ExistingFile);
  auto* dt_opt = sim->add_option("--dt", dt, "time step [s], divisor of 3600");
  auto* model_opt = sim->add_option("--model", model, "unit model: 0 ideal, 1 on/off, 2 regression");
  auto* tset_opt = sim->add_option("--t-set", t_set, "set-point temperature [degC]");
  sim->add_option("-o,--out", sim_out, "output CSV (default <output_dir>/run_model<N>.csv)");
  sim->add_flag("--hourly", hourly, "also write the hourly aggregate next to the output");

  auto* fit = app.add_subcommand("fit-coil", "fit the capacity regression to a performance table");
  std::string table_path, enthalpy = "psychrometric";
  fit->add_option("table", table_path, "coil table CSV")->required()->check(CLI::ExistingFile);
  fit->add_option("--enthalpy", enthalpy, "enthalpy convention for the fit")
      ->check(CLI::IsMember({"psychrometric", "table"}));

  auto* cmp = app.add_subcommand("compare", "hourly comparison report of several runs");
  std::vector<std::string> run_files, run_names;
  cmp->add_option("runs", run_files, "run CSV files (step or hourly records)")
      ->required()
      ->check(CLI::ExistingFile);
  cmp->add_option("--names", run_names, "labels for the runs, in order");

  auto* psy = app.add_subcommand("psychro", "moist-air properties at a dry bulb and wet bulb (or rh)");
  double t_db = 0.0, second = 0.0, p_atm = psychro::kStandardPressure;
  bool as_rh = false;
  psy->add_option("t_db", t_db, "dry-bulb temperature [degC]")->required();
  psy->add_option("t_wb_or_rh", second, "wet-bulb temperature [degC], or rh fraction with --rh")
      ->required();
  psy->add_flag("--rh", as_rh, "interpret the second value as relative humidity (0..1)");
  psy->add_option("--p-atm", p_atm, "total pressure [kPa]");

  auto* agg = app.add_subcommand("aggregate", "average step records to hourly records");
  std::string agg_in, agg_out;
  agg->add_option("run", agg_in, "step-record CSV")->required()->check(CLI::ExistingFile);
  agg->add_option("-o,--out", agg_out, "output CSV (default <run>_hourly.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  try {
    if (*sim) {
      if (*dt_opt) overrides.dt = dt;
      if (*model_opt) overrides.model = model;
      if (*tset_opt) overrides.t_set = t_set;
      return run_simulate(project_path, overrides, sim_out, hourly);
    }
    if (*fit) return run_fit_coil(table_path, enthalpy);
    if (*cmp) return run_compare(run_files, run_names);
    if (*psy) return run_psychro(t_db, second, as_rh, p_atm);
    if (*agg) return run_aggregate(agg_in, agg_out);
  } catch (const ValidationError& e) {
    std::cerr << "validation failed:\n";
    for (const auto& p : e.problems()) std::cerr << "  " << p << '\n';
    return kValidation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}
