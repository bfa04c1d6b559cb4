#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hpsim/error.hpp"
#include "hpsim/io.hpp"
#include "hpsim/report.hpp"
#include "hpsim/simulator.hpp"

using namespace hpsim;

namespace {

envelope::ZoneConfig small_zone() {
  envelope::ZoneConfig z;
  z.air_capacity = 200000.0;
  z.volume = 20.0;
  envelope::WallSurface w{"shell", 40.0, 0.4, 10000.0, 10000.0, 3.0, 12.0, 5.0, 4.5, 0.2, 0.0};
  z.walls.push_back(w);
  envelope::WallSurface slab{"slab", 9.0, 0.3, 80000.0, 10000.0, 3.0, 3.0, 5.0, 0.0, 0.0, 0.0};
  z.walls.push_back(slab);
  return z;
}

WeatherSeries flat_weather(int hours, double t, double rh, double g) {
  WeatherSeries s;
  const auto base = parse_timestamp("1996-10-20T00:00:00");
  for (int i = 0; i <= hours; ++i) s.records.push_back({base + std::chrono::hours{i}, t, rh, g, 0.0});
  return s;
}

WeatherSeries warm_weather(int hours) {
  WeatherSeries s;
  const auto base = parse_timestamp("1996-10-20T00:00:00");
  for (int i = 0; i <= hours; ++i) {
    const double ph = 2.0 * M_PI * (i % 24 - 9) / 24.0;
    const double g = std::max(0.0, 900.0 * std::sin(M_PI * (i % 24 - 6) / 12.0));
    s.records.push_back({base + std::chrono::hours{i}, 27.0 + 4.0 * std::sin(ph), 0.65, g, 1.0});
  }
  return s;
}

hvac::HvacConfig onoff() {
  hvac::HvacConfig h;
  h.model = hvac::HvacModel::OnOff;
  return h;
}

io::ProjectConfig default_project() { return io::load_project(HPSIM_DATA_DIR "/default_project.json"); }

}  // namespace

TEST_CASE("equilibrium run stays put") {
  const auto zone = small_zone();
  auto unit = onoff();
  unit.t_set = 23.0;
  unit.dead_half_band = 5.0;  // never reached
  SimConfig sim;
  sim.initial_t = 23.0;
  const auto rec = run_simulation(zone, unit, flat_weather(6, 23.0, 0.5, 0.0), sim);
  CHECK(rec.size() == 360);
  for (const auto& r : rec) {
    CHECK(r.t_ai == doctest::Approx(23.0).epsilon(1e-12));
    CHECK_FALSE(r.is_on);
    CHECK(r.w_zone == doctest::Approx(rec.front().w_zone).epsilon(1e-12));
  }
}

TEST_CASE("records honour the coupling contract") {
  const auto zone = small_zone();
  const auto unit = onoff();
  SimConfig sim;
  const auto weather = warm_weather(48);
  const auto rec = run_simulation(zone, unit, weather, sim);
  REQUIRE(rec.size() == 48 * 60);
  const bool any_on = std::any_of(rec.begin(), rec.end(), [](const auto& r) { return r.is_on; });
  CHECK(any_on);

  // Replaying the thermal step with the recorded q_sens reproduces t_ai.
  auto env = envelope::EnvelopeState::uniform(zone.walls.size(), weather.records[0].t_ae);
  for (std::size_t k = 0; k < 600; ++k) {
    const auto wx = interpolate_weather(weather, rec[k].ts);
    env = envelope::step_thermal(zone, env, wx.bc, rec[k].q_sens, 60.0);
    CHECK(env.t_ai == rec[k].t_ai);
  }
  for (const auto& r : rec) CHECK(r.q_tot == r.q_sens + r.q_lat);
  CHECK(rec[0].ts == weather.start() + std::chrono::minutes{1});
}

TEST_CASE("controller acts on the previous step's air temperature") {
  const auto zone = small_zone();
  const auto unit = onoff();
  const auto rec = run_simulation(zone, unit, warm_weather(24), {});
  for (std::size_t k = 1; k < rec.size(); ++k) {
    if (rec[k].is_on && !rec[k - 1].is_on) CHECK(rec[k - 1].t_ai >= unit.t_set + unit.dead_half_band);
    if (!rec[k].is_on && rec[k - 1].is_on) CHECK(rec[k - 1].t_ai <= unit.t_set - unit.dead_half_band);
  }
}

TEST_CASE("runs are deterministic") {
  const auto p = default_project();
  auto sim = p.sim;
  sim.end = parse_timestamp("1996-10-21T00:00:00");
  const auto weather = io::load_weather_csv(p.weather_file);
  const auto a = run_simulation(p.zone, p.hvac, weather, sim);
  const auto b = run_simulation(p.zone, p.hvac, weather, sim);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].t_ai == b[k].t_ai);
    CHECK(a[k].power == b[k].power);
    CHECK(a[k].w_zone == b[k].w_zone);
  }
}

TEST_CASE("ideal model runs hourly and holds the set point") {
  const auto zone = small_zone();
  hvac::HvacConfig unit;
  unit.model = hvac::HvacModel::Ideal;
  unit.w_set = 0.0105;
  SimConfig sim;
  sim.dt = 60;
  const auto rec = run_simulation(zone, unit, warm_weather(48), sim);
  CHECK(rec.size() == 48);
  CHECK(effective_dt(unit, sim) == 3600);
  for (const auto& r : rec) {
    CHECK(r.t_ai <= unit.t_set + 1e-9);
    if (r.is_on) CHECK(r.t_ai == doctest::Approx(unit.t_set).epsilon(1e-9));
    CHECK(r.power == doctest::Approx(std::abs(r.q_tot) / unit.cop).epsilon(1e-12));
  }
}

TEST_CASE("oversized unit keeps the air inside the band plus one step") {
  const auto p = default_project();
  const auto weather = io::load_weather_csv(p.weather_file);
  auto unit = p.hvac;
  unit.model = hvac::HvacModel::OnOff;
  auto sim = p.sim;
  sim.end = parse_timestamp("1996-10-23T00:00:00");

  const auto band = [&](int dt, int& cycles) {
    sim.dt = dt;
    const auto rec = run_simulation(p.zone, unit, weather, sim);
    std::size_t first_off = 1;
    while (first_off < rec.size() && !(rec[first_off - 1].is_on && !rec[first_off].is_on)) ++first_off;
    double lo = 1e9, hi = -1e9;
    for (std::size_t k = first_off; k < rec.size(); ++k) {
      lo = std::min(lo, rec[k].t_ai);
      hi = std::max(hi, rec[k].t_ai);
    }
    cycles = 0;
    for (std::size_t k = 1; k < rec.size(); ++k) cycles += rec[k].is_on && !rec[k - 1].is_on;
    return std::max(unit.t_set - lo, hi - unit.t_set);
  };
  int c60 = 0, c30 = 0;
  const double e60 = band(60, c60), e30 = band(30, c30);
  CHECK(e60 <= 0.6);
  CHECK(e30 <= e60);
  CHECK(c30 >= c60);
}

TEST_CASE("simulation errors carry the timestamp") {
  const auto zone = small_zone();
  auto unit = onoff();
  SimConfig sim;
  sim.end = parse_timestamp("1996-10-22T00:00:00");
  CHECK_THROWS_AS(run_simulation(zone, unit, flat_weather(6, 23.0, 0.5, 0.0), sim), RangeError);
  sim.end.reset();
  sim.dt = 7;
  CHECK_THROWS_AS(run_simulation(zone, unit, flat_weather(6, 23.0, 0.5, 0.0), sim), ValidationError);

  // A dry-bulb far outside the property range fails inside the loop.
  sim.dt = 60;
  auto hot = flat_weather(2, 23.0, 0.5, 0.0);
  hot.records[2].t_ae = 75.0;
  hot.records[2].rh = 0.9;
  try {
    run_simulation(zone, unit, hot, sim);
    FAIL("expected a simulation error");
  } catch (const SimulationError& e) {
    CHECK(std::string(e.what()).find("at 1996-10-20T01:00:00") != std::string::npos);
  }
}

TEST_CASE("hourly aggregation") {
  std::vector<StepRecord> rec;
  const auto base = parse_timestamp("1996-10-20T00:00:00");
  for (int k = 1; k <= 60; ++k) {
    StepRecord r;
    r.ts = base + std::chrono::minutes{k};
    r.t_ai = 24.0;
    r.is_on = k <= 30;
    r.power = r.is_on ? 1000.0 : 0.0;
    r.q_sens = r.is_on ? -2000.0 : 0.0;
    r.q_lat = r.is_on ? -500.0 : 0.0;
    r.q_tot = r.q_sens + r.q_lat;
    rec.push_back(r);
  }
  auto agg = aggregate_hourly(rec);
  REQUIRE(agg.hours.size() == 1);
  const auto& h = agg.hours[0];
  CHECK(h.ts == base + std::chrono::hours{1});
  CHECK(h.power == 500.0);
  CHECK(h.energy_kwh == 0.5);
  CHECK(h.duty_cycle == 0.5);
  CHECK(h.cycles == 1);
  CHECK(h.t_ai == 24.0);
  CHECK(h.q_tot == h.q_sens + h.q_lat);

  for (auto& r : rec) {
    r.is_on = true;
    r.power = 1234.5;
  }
  agg = aggregate_hourly(rec);
  CHECK(agg.hours[0].power == doctest::Approx(1234.5).epsilon(1e-15));
  CHECK(agg.hours[0].duty_cycle == 1.0);

  rec.pop_back();
  agg = aggregate_hourly(rec);
  CHECK(agg.hours.empty());
  CHECK(agg.dropped_partial_hours == 1);
}

TEST_CASE("model comparison") {
  const auto zone = small_zone();
  const auto weather = warm_weather(48);
  const auto hours = aggregate_hourly(run_simulation(zone, onoff(), weather, {})).hours;
  const auto self = compare_models({{"a", hours}, {"b", hours}});
  REQUIRE(self.pairs.size() == 1);
  CHECK(self.pairs[0].rmse_t_ai == 0.0);
  CHECK(self.pairs[0].bias_t_ai == 0.0);
  CHECK(self.pairs[0].electric_kwh_diff == 0.0);

  const std::vector<HourlyRecord> first(hours.begin(), hours.begin() + 20);
  const std::vector<HourlyRecord> rest(hours.begin() + 20, hours.end());
  CHECK(summarize({"x", first}).electric_kwh + summarize({"y", rest}).electric_kwh ==
        doctest::Approx(summarize({"z", hours}).electric_kwh).epsilon(1e-12));

  CHECK_THROWS_AS(compare_models({{"a", hours}, {"b", first}}), DomainError);
  CHECK(format_report(self).find("elec_kWh") != std::string::npos);
}
