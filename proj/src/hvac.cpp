#include "hpsim/hvac.hpp"

#include <algorithm>
#include <cmath>

#include "hpsim/error.hpp"

namespace hpsim::hvac {

std::string to_string(HvacModel m) {
  switch (m) {
    case HvacModel::Ideal:
      return "ideal";
    case HvacModel::OnOff:
      return "onoff";
    case HvacModel::Regression:
      return "regression";
  }
  return "unknown";
}

std::vector<std::string> HvacConfig::problems() const {
  std::vector<std::string> out;
  if (!(q_nominal_total > 0.0)) out.emplace_back("hvac.q_nominal_total must be > 0");
  if (!(shf > 0.0 && shf <= 1.0)) out.emplace_back("hvac.shf must be in (0, 1]");
  if (!(cop > 0.0)) out.emplace_back("hvac.cop must be > 0");
  if (!(tau > 0.0)) out.emplace_back("hvac.tau must be > 0");
  if (!(dead_half_band > 0.0)) out.emplace_back("hvac.dead_half_band must be > 0");
  if (!(airflow > 0.0)) out.emplace_back("hvac.airflow must be > 0");
  if (!(bypass_factor >= 0.0 && bypass_factor < 1.0)) {
    out.emplace_back("hvac.bypass_factor must be in [0, 1)");
  }
  if (!(c_pm > 0.0)) out.emplace_back("hvac.c_pm must be > 0");
  if (model == HvacModel::Ideal && !w_set) out.emplace_back("hvac.w_set is required by model 0");
  if (w_set && !(*w_set >= 0.0)) out.emplace_back("hvac.w_set must be >= 0");
  if (model == HvacModel::Regression && !regression) {
    out.emplace_back("hvac.regression is required by model 2 (coil table)");
  }
  return out;
}

void HvacConfig::validate() const {
  auto p = problems();
  if (!p.empty()) throw ValidationError(std::move(p));
}

coil::CoilAirSide HvacConfig::air_side() const {
  return {airflow, bypass_factor, c_pm, regression ? regression->t_db_ref : 27.0};
}

HvacState controller_step(double t_ai, const HvacConfig& cfg, const HvacState& prev, double dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  bool on = prev.is_on;
  if (t_ai >= cfg.t_set + cfg.dead_half_band) {
    on = true;
  } else if (t_ai <= cfg.t_set - cfg.dead_half_band) {
    on = false;
  }
  if (!on) return {false, 0.0};
  if (!prev.is_on) return {true, 0.0};
  return {true, prev.t_since_start + dt};
}

double startup_factor(double t_since_start, double tau) {
  if (!(tau > 0.0)) throw DomainError("time constant must be > 0");
  if (!(t_since_start >= 0.0)) throw DomainError("time since start must be >= 0");
  return -std::expm1(-t_since_start / tau);
}

double startup_factor_mean(double t_since_start, double dt, double tau) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  if (!(tau > 0.0)) throw DomainError("time constant must be > 0");
  if (!(t_since_start >= 0.0)) throw DomainError("time since start must be >= 0");
  // 1 - (tau/dt) e^{-t/tau} (1 - e^{-dt/tau})
  return 1.0 + tau / dt * std::exp(-t_since_start / tau) * std::expm1(-dt / tau);
}

double step_startup_factor(const HvacState& state, const HvacConfig& cfg, double dt) {
  if (cfg.startup_sampling == StartupSampling::Point) {
    return startup_factor(state.t_since_start, cfg.tau);
  }
  return startup_factor_mean(state.t_since_start, dt, cfg.tau);
}

HvacOutput model0_step(double sens_load, double lat_load, const HvacConfig& cfg) {
  HvacOutput out;
  out.q_sens = std::min(sens_load, 0.0);
  out.q_lat = std::min(lat_load, 0.0);
  out.q_tot = out.q_sens + out.q_lat;
  out.power = std::abs(out.q_tot) / cfg.cop;
  return out;
}

HvacOutput model1_step(const HvacState& state, const HvacConfig& cfg, double dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  HvacOutput out;
  if (!state.is_on) return out;
  const double q_tot = -cfg.q_nominal_total * 1000.0 * step_startup_factor(state, cfg, dt);
  out.q_sens = cfg.shf * q_tot;
  out.q_lat = q_tot - out.q_sens;
  out.q_tot = q_tot;
  out.power = cfg.q_nominal_total * 1000.0 / cfg.cop;
  return out;
}

HvacOutput model2_step(const HvacState& state, const psychro::MoistAirState& zone_air,
                       double t_ext, const HvacConfig& cfg, double dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  if (!cfg.regression) throw ConfigError("model 2 requires a fitted coil regression");
  HvacOutput out;
  if (!state.is_on) return out;
  const auto& reg = *cfg.regression;

  const double h_ent = psychro::enthalpy(zone_air);
  const auto ref = coil::capacities_at_reference(reg, h_ent, t_ext);
  const double q_sens_corr = coil::bypass_corrected_sensible(
      ref.q_sens, zone_air.t_db, psychro::specific_volume(zone_air), cfg.air_side());
  const auto split = coil::split_capacities(ref.q_tot, q_sens_corr);

  const double ramp = step_startup_factor(state, cfg, dt) * 1000.0;
  out.q_sens = -split.q_sens * ramp;
  out.q_lat = -split.q_lat * ramp;
  out.q_tot = out.q_sens + out.q_lat;
  out.power = coil::power_at(reg, t_ext) * 1000.0;
  out.warnings = ref.warnings | (split.dry_coil ? coil::kDryCoil : coil::kNone);
  return out;
}

}  // namespace hpsim::hvac
