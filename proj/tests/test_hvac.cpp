#include <doctest.h>

#include <cmath>

#include "hpsim/error.hpp"
#include "hpsim/hvac.hpp"
#include "hpsim/io.hpp"

using namespace hpsim;
using namespace hpsim::hvac;

namespace {

HvacConfig regression_config() {
  HvacConfig cfg;
  cfg.model = HvacModel::Regression;
  cfg.regression =
      coil::fit_capacity_regression(io::load_coil_table_csv(HPSIM_DATA_DIR "/table1.csv"));
  return cfg;
}

double on_period_energy(const HvacConfig& cfg, double period, double dt) {
  HvacState st;
  double energy = 0.0;
  st = controller_step(cfg.t_set + 1.0, cfg, st, dt);
  for (double t = 0.0; t < period - 1e-9; t += dt) {
    energy += -model1_step(st, cfg, dt).q_tot * dt;
    st = controller_step(cfg.t_set + 1.0, cfg, st, dt);
  }
  return energy;
}

}  // namespace

TEST_CASE("controller thresholds and hysteresis") {
  HvacConfig cfg;
  const HvacState off{};
  const auto on = controller_step(23.5, cfg, off, 60.0);
  CHECK(on.is_on);
  CHECK(on.t_since_start == 0.0);

  const auto hold = controller_step(23.0, cfg, on, 60.0);
  CHECK(hold.is_on);
  CHECK(hold.t_since_start == 60.0);
  CHECK_FALSE(controller_step(23.0, cfg, off, 60.0).is_on);
  CHECK_FALSE(controller_step(23.49, cfg, off, 60.0).is_on);

  const auto stop = controller_step(22.5, cfg, hold, 60.0);
  CHECK_FALSE(stop.is_on);
  CHECK(stop.t_since_start == 0.0);
  CHECK_THROWS_AS(controller_step(23.0, cfg, off, 0.0), DomainError);
}

TEST_CASE("controller never chatters inside the band") {
  HvacConfig cfg;
  for (bool start_on : {false, true}) {
    HvacState st{start_on, 0.0};
    for (int i = 0; i < 200; ++i) {
      const double t = 22.51 + 0.98 * std::fabs(std::sin(0.37 * i));
      st = controller_step(t, cfg, st, 60.0);
      CHECK(st.is_on == start_on);
    }
  }
}

TEST_CASE("start-up factor") {
  CHECK(startup_factor(0.0, 120.0) == 0.0);
  CHECK(std::abs(startup_factor(120.0, 120.0) - 0.6321205588285577) < 1e-12);
  CHECK(startup_factor(600.0, 120.0) == doctest::Approx(0.9932620530009145).epsilon(1e-12));
  double prev = -1.0;
  for (double t = 0.0; t < 3000.0; t += 7.0) {
    const double f = startup_factor(t, 120.0);
    CHECK(f > prev);
    CHECK(f < 1.0);
    prev = f;
  }
  CHECK_THROWS_AS(startup_factor(-1.0, 120.0), DomainError);
  CHECK_THROWS_AS(startup_factor(1.0, 0.0), DomainError);
}

TEST_CASE("step-mean start-up factor is the exact average") {
  // Composite Simpson on [t, t + dt] versus the closed form.
  for (double t0 : {0.0, 45.0, 300.0}) {
    const double dt = 60.0;
    const int n = 2000;
    double s = startup_factor(t0, 120.0) + startup_factor(t0 + dt, 120.0);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * startup_factor(t0 + dt * i / n, 120.0);
    const double mean = s * (dt / n) / 3.0 / dt;
    CHECK(startup_factor_mean(t0, dt, 120.0) == doctest::Approx(mean).epsilon(1e-10));
  }
  CHECK(startup_factor_mean(0.0, 1e-6, 120.0) < 1e-8);
}

TEST_CASE("ideal model passes loads through at constant COP") {
  HvacConfig cfg;
  cfg.cop = 2.64;
  const auto out = model0_step(-3000.0, -300.0, cfg);
  CHECK(out.power == doctest::Approx(1250.0).epsilon(1e-12));
  CHECK(out.q_tot == out.q_sens + out.q_lat);
  CHECK(model0_step(0.0, 0.0, cfg).power == 0.0);
  const auto heat = model0_step(500.0, 0.0, cfg);
  CHECK(heat.q_sens == 0.0);
  CHECK(heat.q_lat == 0.0);
  CHECK(heat.q_tot == 0.0);
  CHECK(heat.power == 0.0);
}

TEST_CASE("on/off model at constant capacity") {
  HvacConfig cfg;
  cfg.startup_sampling = StartupSampling::Point;
  const auto off = model1_step({false, 0.0}, cfg, 60.0);
  CHECK(off.q_tot == 0.0);
  CHECK(off.power == 0.0);

  const auto on = model1_step({true, 120.0}, cfg, 60.0);
  CHECK(on.q_tot == doctest::Approx(-3300.0 * 0.6321205588285577).epsilon(1e-12));
  CHECK(on.q_tot == doctest::Approx(-2086.0).epsilon(5e-4));
  CHECK(on.q_sens == doctest::Approx(-1594.0).epsilon(1e-3));
  CHECK(on.q_lat <= 0.0);
  CHECK(on.q_tot == doctest::Approx(on.q_sens + on.q_lat).epsilon(1e-15));
  CHECK(on.power == doctest::Approx(1250.0).epsilon(1e-12));

  const auto steady = model1_step({true, 1e6}, cfg, 60.0);
  CHECK(steady.q_tot == doctest::Approx(-3300.0).epsilon(1e-12));
  CHECK(model1_step({true, 0.0}, cfg, 60.0).power == on.power);
}

TEST_CASE("on-period energy matches the analytic start-up integral") {
  HvacConfig cfg;
  const double q = cfg.q_nominal_total * 1000.0, tau = cfg.tau;
  for (auto sampling : {StartupSampling::Point, StartupSampling::StepMean}) {
    cfg.startup_sampling = sampling;
    for (double period : {60.0, 240.0, 900.0, 3600.0}) {
      // Left sampling loses about dt/2 of full capacity per start; skip short periods.
      if (sampling == StartupSampling::Point && period < 2.0 * tau) continue;
      const double exact = q * (period - tau * (1.0 - std::exp(-period / tau)));
      CHECK(std::abs(on_period_energy(cfg, period, 1.0) - exact) <= 0.005 * exact);
    }
  }
  // Step-mean sampling is exact at any step that divides the period.
  cfg.startup_sampling = StartupSampling::StepMean;
  const double exact = q * (900.0 - tau * (1.0 - std::exp(-900.0 / tau)));
  CHECK(on_period_energy(cfg, 900.0, 60.0) == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("regression model at the nominal point") {
  const auto cfg = regression_config();
  const double w = psychro::humidity_ratio_from_wetbulb(27.0, 19.0);
  const auto zone = psychro::make_state(27.0, w);

  const auto steady = model2_step({true, 1e6}, zone, 35.0, cfg, 60.0);
  CHECK(steady.q_tot == doctest::Approx(-3300.0).epsilon(0.03));
  CHECK(steady.q_sens == doctest::Approx(-2520.0).epsilon(0.03));
  CHECK(steady.power == doctest::Approx(1250.0).epsilon(0.03));
  CHECK(steady.q_tot == doctest::Approx(steady.q_sens + steady.q_lat).epsilon(1e-15));

  HvacConfig point = cfg;
  point.startup_sampling = StartupSampling::Point;
  const auto start = model2_step({true, 0.0}, zone, 35.0, point, 60.0);
  CHECK(start.q_tot == 0.0);
  CHECK(start.power == steady.power);

  const auto off = model2_step({false, 0.0}, zone, 35.0, cfg, 60.0);
  CHECK(off.q_tot == 0.0);
  CHECK(off.power == 0.0);
}

TEST_CASE("regression model at a cooler entering state with the same enthalpy") {
  const auto cfg = regression_config();
  const double w27 = psychro::humidity_ratio_from_wetbulb(27.0, 19.0);
  const double h = psychro::moist_air_enthalpy(27.0, w27);
  const auto warm = psychro::make_state(27.0, w27);
  const auto cool = psychro::make_state(23.0, psychro::humidity_ratio_from_enthalpy(23.0, h));

  const auto a = model2_step({true, 1e6}, warm, 30.0, cfg, 60.0);
  const auto b = model2_step({true, 1e6}, cool, 30.0, cfg, 60.0);
  CHECK(b.q_tot == doctest::Approx(a.q_tot).epsilon(1e-12));
  CHECK(-b.q_sens > -a.q_sens);
  CHECK(-b.q_lat < -a.q_lat);
}

TEST_CASE("regression model output signs over the operating range") {
  const auto cfg = regression_config();
  for (double t_db = 20.0; t_db <= 30.0; t_db += 1.0) {
    for (double rh = 0.2; rh <= 0.9; rh += 0.1) {
      const auto zone = psychro::make_state(t_db, psychro::humidity_ratio_from_rh(t_db, rh));
      for (double t_ext = 15.0; t_ext <= 40.0; t_ext += 5.0) {
        const auto out = model2_step({true, 300.0}, zone, t_ext, cfg, 60.0);
        CHECK(out.q_sens <= 0.0);
        CHECK(out.q_lat <= 0.0);
        CHECK(-out.q_sens <= -out.q_tot + 1e-9);
        CHECK(out.power > 0.0);
      }
    }
  }
}

TEST_CASE("regression model flags clamped inputs") {
  const auto cfg = regression_config();
  const auto dry = psychro::make_state(23.0, 0.004);
  const auto out = model2_step({true, 1e6}, dry, 38.0, cfg, 60.0);
  CHECK((out.warnings & coil::kEnthalpyClamped) != 0);
  CHECK((out.warnings & coil::kOutdoorClamped) != 0);
  HvacConfig missing;
  missing.model = HvacModel::Regression;
  CHECK_THROWS_AS(model2_step({true, 0.0}, dry, 30.0, missing, 60.0), ConfigError);
}

TEST_CASE("config invariants") {
  HvacConfig cfg;
  CHECK(cfg.problems().empty());
  cfg.shf = 1.2;
  cfg.cop = 0.0;
  cfg.tau = -1.0;
  cfg.dead_half_band = 0.0;
  CHECK(cfg.problems().size() == 4);
  CHECK_THROWS_AS(cfg.validate(), ValidationError);

  HvacConfig ideal;
  ideal.model = HvacModel::Ideal;
  CHECK(ideal.problems().size() == 1);
  CHECK(to_string(HvacModel::Regression) == "regression");
}
