#include "hpsim/simulator.hpp"

#include <cmath>
#include <map>

#include "hpsim/error.hpp"

namespace hpsim {

std::vector<std::string> SimConfig::problems() const {
  std::vector<std::string> out;
  if (dt <= 0 || 3600 % dt != 0) out.emplace_back("sim.dt must be a positive divisor of 3600");
  if (start && end && *end <= *start) out.emplace_back("sim.end must be after sim.start");
  if (initial_rh && !(*initial_rh >= 0.0 && *initial_rh <= 1.0)) {
    out.emplace_back("sim.initial_rh must be in [0, 1]");
  }
  if (!(p_atm > 0.0)) out.emplace_back("sim.p_atm must be > 0");
  if (!(latent_heat > 0.0)) out.emplace_back("sim.latent_heat must be > 0");
  return out;
}

void SimConfig::validate() const {
  auto p = problems();
  if (!p.empty()) throw ValidationError(std::move(p));
}

int effective_dt(const hvac::HvacConfig& hvac, const SimConfig& sim) {
  return hvac.model == hvac::HvacModel::Ideal ? 3600 : sim.dt;
}

std::vector<StepRecord> run_simulation(const envelope::ZoneConfig& zone,
                                       const hvac::HvacConfig& hvac,
                                       const WeatherSeries& weather, const SimConfig& sim) {
  zone.validate();
  hvac.validate();
  sim.validate();
  weather.validate();

  const int dt_s = effective_dt(hvac, sim);
  const double dt = dt_s;
  const Timestamp start = sim.start.value_or(weather.start());
  const Timestamp end = sim.end.value_or(weather.end());
  if (start < weather.start() || end > weather.end()) {
    throw RangeError("simulation period extends beyond the weather series");
  }
  const long long n_steps = seconds_between(start, end) / dt_s;

  const auto first = interpolate_weather(weather, start, sim.p_atm);
  const double t0 = sim.initial_t.value_or(first.bc.t_ae);
  const double w0 = sim.initial_rh ? psychro::humidity_ratio_from_rh(t0, *sim.initial_rh, sim.p_atm)
                                   : first.w_out;

  auto env = envelope::EnvelopeState::uniform(zone.walls.size(), t0);
  moisture::MoistureState moist{w0, moisture::zone_air_mass(zone.volume, t0, w0, sim.p_atm)};
  hvac::HvacState unit;

  std::vector<StepRecord> records;
  records.reserve(static_cast<std::size_t>(std::max(0LL, n_steps)));
  for (long long k = 0; k < n_steps; ++k) {
    const Timestamp ts = start + std::chrono::seconds{(k + 1) * dt_s};
    try {
      const auto wx = interpolate_weather(weather, ts, sim.p_atm);
      hvac::HvacOutput out;
      switch (hvac.model) {
        case hvac::HvacModel::Ideal: {
          const double sens = envelope::ideal_zone_sensible_load(zone, env, wx.bc, hvac.t_set, dt);
          const double lat = moisture::ideal_latent_load(moist, zone.air_renewal_flow, wx.w_out,
                                                         *hvac.w_set, sim.latent_heat, dt);
          out = hvac::model0_step(sens, lat, hvac);
          unit.is_on = out.q_tot < 0.0;
          break;
        }
        case hvac::HvacModel::OnOff:
          unit = hvac::controller_step(env.t_ai, hvac, unit, dt);
          out = hvac::model1_step(unit, hvac, dt);
          break;
        case hvac::HvacModel::Regression:
          unit = hvac::controller_step(env.t_ai, hvac, unit, dt);
          out = hvac::model2_step(unit, {env.t_ai, moist.w_zone, sim.p_atm}, wx.bc.t_ae, hvac, dt);
          break;
      }

      env = envelope::step_thermal(zone, env, wx.bc, out.q_sens, dt);
      const auto mstep = moisture::step_moisture(moist, zone.air_renewal_flow, wx.w_out, out.q_lat,
                                                 sim.latent_heat, dt);
      moist = mstep.state;

      StepRecord rec;
      rec.ts = ts;
      rec.t_ai = env.t_ai;
      rec.t_rm = env.t_rm;
      rec.w_zone = moist.w_zone;
      rec.t_ae = wx.bc.t_ae;
      rec.is_on = unit.is_on;
      rec.q_sens = out.q_sens;
      rec.q_lat = out.q_lat;
      rec.q_tot = out.q_sens + out.q_lat;
      rec.power = out.power;
      rec.warnings = out.warnings | (mstep.clamped ? coil::kMoistureClamped : 0u);
      records.push_back(rec);
    } catch (const std::exception& e) {
      throw SimulationError("at " + format_timestamp(ts) + ": " + e.what());
    }
  }
  return records;
}

HourlyAggregate aggregate_hourly(const std::vector<StepRecord>& records) {
  HourlyAggregate agg;
  if (records.empty()) return agg;
  const long long dt = records.size() > 1 ? seconds_between(records[0].ts, records[1].ts) : 3600;
  if (dt <= 0 || 3600 % dt != 0) throw DomainError("records are not at a fixed sub-hourly step");
  const long long per_hour = 3600 / dt;

  std::size_t i = 0;
  bool prev_on = false;
  while (i < records.size()) {
    const long long epoch = records[i].ts.time_since_epoch().count();
    const long long rem = ((epoch % 3600) + 3600) % 3600;
    const long long hour_end = rem == 0 ? epoch : epoch - rem + 3600;
    std::size_t j = i;
    while (j < records.size() && records[j].ts.time_since_epoch().count() <= hour_end) ++j;

    const std::size_t count = j - i;
    bool regular = static_cast<long long>(count) == per_hour;
    for (std::size_t k = i + 1; regular && k < j; ++k) {
      regular = seconds_between(records[k - 1].ts, records[k].ts) == dt;
    }
    if (!regular) {
      ++agg.dropped_partial_hours;
      prev_on = records[j - 1].is_on;
      i = j;
      continue;
    }

    HourlyRecord h;
    h.ts = Timestamp{std::chrono::seconds{hour_end}};
    int on_steps = 0;
    for (std::size_t k = i; k < j; ++k) {
      const auto& r = records[k];
      h.t_ai += r.t_ai;
      h.t_rm += r.t_rm;
      h.w_zone += r.w_zone;
      h.t_ae += r.t_ae;
      h.q_sens += r.q_sens;
      h.q_lat += r.q_lat;
      h.power += r.power;
      h.warnings |= r.warnings;
      if (r.is_on) {
        ++on_steps;
        if (!prev_on) ++h.cycles;
      }
      prev_on = r.is_on;
    }
    const double n = static_cast<double>(count);
    h.t_ai /= n;
    h.t_rm /= n;
    h.w_zone /= n;
    h.t_ae /= n;
    h.q_sens /= n;
    h.q_lat /= n;
    h.q_tot = h.q_sens + h.q_lat;
    h.power /= n;
    h.duty_cycle = on_steps / n;
    h.energy_kwh = h.power / 1000.0;
    agg.hours.push_back(h);
    i = j;
  }
  return agg;
}

}  // namespace hpsim
