#pragma once

// Moist-air properties at a given total pressure.
//
// Saturation pressure uses the Hyland-Wexler correlation over liquid water
// (ASHRAE Handbook of Fundamentals, ch. 1). It is applied below 0 degC as
// well (supercooled water), so the curve stays smooth across the freezing
// point. Humidity ratio from wet bulb uses the ASHRAE psychrometer relation
// for a wet wick. Units: degC, kPa, kg/kg, kJ/kg dry air, m3/kg dry air.

namespace hpsim::psychro {

inline constexpr double kStandardPressure = 101.325;  // kPa
inline constexpr double kMolarMassRatio = 0.621945;   // M_w / M_da
inline constexpr double kDryAirGasConstant = 0.287042;  // kJ kg^-1 K^-1
inline constexpr double kCpDryAir = 1.006;            // kJ kg^-1 K^-1
inline constexpr double kCpVapour = 1.86;             // kJ kg^-1 K^-1
inline constexpr double kLatentAtZero = 2501.0;       // kJ/kg
/// Constant moist-air specific heat used by the coil bypass correction.
inline constexpr double kCpMoistAir = 1.02;           // kJ kg^-1 K^-1

inline constexpr double kMinTemperature = -40.0;
inline constexpr double kMaxTemperature = 60.0;

struct MoistAirState {
  double t_db = 0.0;                   // degC
  double w = 0.0;                      // kg/kg
  double p_atm = kStandardPressure;    // kPa
};

/// Builds a state after checking w >= 0, p > 0 and w <= w_sat (+1e-6).
MoistAirState make_state(double t_db, double w, double p_atm = kStandardPressure);

/// Saturation vapour pressure [kPa]. Throws DomainError outside [-40, 60] degC.
double saturation_vapor_pressure(double t);

double saturation_humidity_ratio(double t_db, double p_atm = kStandardPressure);

double humidity_ratio_from_vapor_pressure(double p_v, double p_atm = kStandardPressure);

double humidity_ratio_from_rh(double t_db, double rh, double p_atm = kStandardPressure);

double relative_humidity(double t_db, double w, double p_atm = kStandardPressure);

double humidity_ratio_from_wetbulb(double t_db, double t_wb,
                                   double p_atm = kStandardPressure);

/// h = 1.006 t + w (2501 + 1.86 t), datum dry air and liquid water at 0 degC.
double moist_air_enthalpy(double t_db, double w);

/// Inverse of moist_air_enthalpy in w at fixed dry bulb.
double humidity_ratio_from_enthalpy(double t_db, double h);

/// Ideal-gas moist air: v = R_da T (1 + 1.607858 w) / p.
double specific_volume(double t_db, double w, double p_atm = kStandardPressure);

inline double enthalpy(const MoistAirState& s) { return moist_air_enthalpy(s.t_db, s.w); }
inline double specific_volume(const MoistAirState& s) {
  return specific_volume(s.t_db, s.w, s.p_atm);
}

}  // namespace hpsim::psychro
