#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpsim/coil.hpp"
#include "hpsim/psychro.hpp"

// Three levels of split-system cooling model.
//   Ideal:      meets the sensible/latent loads exactly, constant COP.
//   OnOff:      constant nominal capacity split by SHF, first-order start-up,
//               constant electric power while on.
//   Regression: capacities from the catalogue regression corrected for the
//               entering dry bulb, same start-up law, power linear in T_ext.
// Capacities handed to the zone are negative (heat extracted), watts.

namespace hpsim::hvac {

enum class HvacModel : int { Ideal = 0, OnOff = 1, Regression = 2 };

std::string to_string(HvacModel m);

/// How the start-up law is sampled over a time step: at the step start, or
/// averaged exactly over [t, t + dt] so the delivered energy is independent
/// of dt for a given on-period.
enum class StartupSampling { StepMean, Point };

struct HvacConfig {
  HvacModel model = HvacModel::OnOff;
  double q_nominal_total = 3.3;   // kW
  double shf = 2.52 / 3.30;
  double cop = 3.30 / 1.25;
  double tau = 120.0;             // s
  StartupSampling startup_sampling = StartupSampling::StepMean;
  double dead_half_band = 0.5;    // K
  double t_set = 23.0;            // degC
  std::optional<double> w_set;    // kg/kg, required by the ideal model
  double airflow = 0.136;         // m3/s
  double bypass_factor = 0.04;
  double c_pm = psychro::kCpMoistAir;
  std::optional<coil::CoilRegression> regression;

  std::vector<std::string> problems() const;
  void validate() const;
  coil::CoilAirSide air_side() const;
};

struct HvacState {
  bool is_on = false;
  double t_since_start = 0.0;  // s, counts only while on
};

struct HvacOutput {
  double q_sens = 0.0;  // W
  double q_lat = 0.0;   // W
  double q_tot = 0.0;   // W
  double power = 0.0;   // W
  std::uint32_t warnings = coil::kNone;
};

/// Dead-zone thermostat on the sensed air temperature.
HvacState controller_step(double t_ai, const HvacConfig& cfg, const HvacState& prev, double dt);

/// 1 - exp(-t / tau).
double startup_factor(double t_since_start, double tau);

/// Mean of startup_factor over [t_since_start, t_since_start + dt].
double startup_factor_mean(double t_since_start, double dt, double tau);

/// Factor applied to the capacities during a step under the configured sampling.
double step_startup_factor(const HvacState& state, const HvacConfig& cfg, double dt);

HvacOutput model0_step(double sens_load, double lat_load, const HvacConfig& cfg);

HvacOutput model1_step(const HvacState& state, const HvacConfig& cfg, double dt);

HvacOutput model2_step(const HvacState& state, const psychro::MoistAirState& zone_air,
                       double t_ext, const HvacConfig& cfg, double dt);

}  // namespace hpsim::hvac
