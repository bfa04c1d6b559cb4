#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpsim/envelope.hpp"
#include "hpsim/hvac.hpp"
#include "hpsim/moisture.hpp"
#include "hpsim/timestamp.hpp"
#include "hpsim/weather.hpp"

namespace hpsim {

struct SimConfig {
  int dt = 60;  // s; the ideal model always runs hourly
  std::optional<Timestamp> start;  // defaults to the first weather record
  std::optional<Timestamp> end;    // defaults to the last weather record
  std::optional<double> initial_t;   // degC, defaults to outdoor air at start
  std::optional<double> initial_rh;  // fraction at initial_t, defaults to outdoor humidity ratio
  double p_atm = psychro::kStandardPressure;
  double latent_heat = moisture::kLatentHeat;

  std::vector<std::string> problems() const;
  void validate() const;
};

struct StepRecord {
  Timestamp ts;  // end of the step
  double t_ai = 0.0;
  double t_rm = 0.0;
  double w_zone = 0.0;
  double t_ae = 0.0;
  bool is_on = false;
  double q_sens = 0.0;  // W
  double q_lat = 0.0;
  double q_tot = 0.0;
  double power = 0.0;   // W
  std::uint32_t warnings = 0;
};

/// Effective step: 3600 s for the ideal model, cfg.dt otherwise.
int effective_dt(const hvac::HvacConfig& hvac, const SimConfig& sim);

/// Couples controller, unit model, envelope and moisture balance. Per step:
/// weather at the step end, controller on the previous step's air
/// temperature, unit output, thermal step with q_sens, moisture step with
/// q_lat. Throws SimulationError naming the failing timestamp.
std::vector<StepRecord> run_simulation(const envelope::ZoneConfig& zone,
                                       const hvac::HvacConfig& hvac,
                                       const WeatherSeries& weather, const SimConfig& sim);

struct HourlyRecord {
  Timestamp ts;  // end of the hour
  double t_ai = 0.0;
  double t_rm = 0.0;
  double w_zone = 0.0;
  double t_ae = 0.0;
  double duty_cycle = 0.0;
  int cycles = 0;       // off -> on transitions inside the hour
  double q_sens = 0.0;  // W, hourly means
  double q_lat = 0.0;
  double q_tot = 0.0;
  double power = 0.0;
  double energy_kwh = 0.0;
  std::uint32_t warnings = 0;
};

struct HourlyAggregate {
  std::vector<HourlyRecord> hours;
  int dropped_partial_hours = 0;
};

/// Means per clock hour (records with ts in (H - 1h, H]). Incomplete hours are
/// dropped and counted.
HourlyAggregate aggregate_hourly(const std::vector<StepRecord>& records);

}  // namespace hpsim
