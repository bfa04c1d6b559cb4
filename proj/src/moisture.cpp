#include "hpsim/moisture.hpp"

#include <algorithm>

#include "hpsim/error.hpp"
#include "hpsim/psychro.hpp"

namespace hpsim::moisture {

namespace {

void check(const MoistureState& state, double m_dot_in, double l_v, double dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  if (!(m_dot_in >= 0.0)) throw DomainError("air renewal flow must be >= 0");
  if (!(state.m_air > 0.0)) throw DomainError("zone air mass must be > 0");
  if (!(l_v > 0.0)) throw DomainError("latent heat must be > 0");
}

}  // namespace

MoistureStep step_moisture(const MoistureState& state, double m_dot_in, double w_in,
                           double q_lat_injected, double l_v, double dt) {
  check(state, m_dot_in, l_v, dt);
  const double storage = state.m_air / dt;
  const double w = (storage * state.w_zone + m_dot_in * w_in + q_lat_injected / l_v) /
                   (storage + m_dot_in);
  MoistureStep out{{std::max(w, 0.0), state.m_air}, w < 0.0};
  return out;
}

double ideal_latent_load(const MoistureState& state, double m_dot_in, double w_in,
                         double w_set, double l_v, double dt) {
  check(state, m_dot_in, l_v, dt);
  const double q = l_v * (state.m_air * (w_set - state.w_zone) / dt - m_dot_in * (w_in - w_set));
  return std::min(q, 0.0);
}

double zone_air_mass(double volume, double t_db, double w, double p_atm) {
  if (!(volume > 0.0)) throw DomainError("zone volume must be > 0");
  return volume / psychro::specific_volume(t_db, w, p_atm);
}

}  // namespace hpsim::moisture
