#pragma once

// Zone humidity-ratio balance, written as a moisture-mass balance:
//   m_air dw/dt = m_dot (w_in - w) + q_lat / l_v
// with in- and outflow equal. Cooling-coil extraction is a negative q_lat.

namespace hpsim::moisture {

inline constexpr double kLatentHeat = 2.45e6;  // J/kg

struct MoistureState {
  double w_zone = 0.0;  // kg/kg
  double m_air = 0.0;   // kg dry air
};

struct MoistureStep {
  MoistureState state;
  bool clamped = false;  // extraction would have driven w below zero
};

/// Backward-Euler update. Throws DomainError for dt <= 0, m_dot_in < 0, m_air <= 0.
MoistureStep step_moisture(const MoistureState& state, double m_dot_in, double w_in,
                           double q_lat_injected, double l_v, double dt);

/// Latent injection [W] that holds w_set at the end of the step, limited to
/// dehumidification (never positive).
double ideal_latent_load(const MoistureState& state, double m_dot_in, double w_in,
                         double w_set, double l_v, double dt);

/// Dry-air mass of a zone volume at the given state.
double zone_air_mass(double volume, double t_db, double w, double p_atm);

}  // namespace hpsim::moisture
