#include "hpsim/psychro.hpp"

#include <cmath>
#include <string>

#include "hpsim/error.hpp"

namespace hpsim::psychro {

namespace {

void require_temperature(double t, const char* what) {
  if (!std::isfinite(t) || t < kMinTemperature || t > kMaxTemperature) {
    throw DomainError(std::string(what) + " = " + std::to_string(t) +
                      " degC outside [-40, 60]");
  }
}

void require_pressure(double p_atm) {
  if (!std::isfinite(p_atm) || p_atm <= 0.0) {
    throw DomainError("total pressure must be > 0 kPa");
  }
}

}  // namespace

double saturation_vapor_pressure(double t) {
  require_temperature(t, "temperature");
  // Hyland-Wexler, liquid water, result in Pa.
  constexpr double c8 = -5.8002206e3;
  constexpr double c9 = 1.3914993;
  constexpr double c10 = -4.8640239e-2;
  constexpr double c11 = 4.1764768e-5;
  constexpr double c12 = -1.4452093e-8;
  constexpr double c13 = 6.5459673;
  const double tk = t + 273.15;
  const double ln_p = c8 / tk + c9 + tk * (c10 + tk * (c11 + tk * c12)) + c13 * std::log(tk);
  return std::exp(ln_p) / 1000.0;
}

double humidity_ratio_from_vapor_pressure(double p_v, double p_atm) {
  require_pressure(p_atm);
  if (p_v < 0.0) throw DomainError("vapour pressure must be >= 0");
  if (p_v >= p_atm) throw DomainError("vapour pressure reaches total pressure");
  return kMolarMassRatio * p_v / (p_atm - p_v);
}

double saturation_humidity_ratio(double t_db, double p_atm) {
  return humidity_ratio_from_vapor_pressure(saturation_vapor_pressure(t_db), p_atm);
}

double humidity_ratio_from_rh(double t_db, double rh, double p_atm) {
  if (!(rh >= 0.0 && rh <= 1.0)) throw DomainError("relative humidity outside [0, 1]");
  return humidity_ratio_from_vapor_pressure(rh * saturation_vapor_pressure(t_db), p_atm);
}

double relative_humidity(double t_db, double w, double p_atm) {
  require_pressure(p_atm);
  if (w < 0.0) throw DomainError("humidity ratio must be >= 0");
  const double p_v = p_atm * w / (kMolarMassRatio + w);
  return p_v / saturation_vapor_pressure(t_db);
}

double humidity_ratio_from_wetbulb(double t_db, double t_wb, double p_atm) {
  require_temperature(t_db, "dry bulb");
  require_temperature(t_wb, "wet bulb");
  if (t_wb > t_db) throw DomainError("wet bulb above dry bulb");
  const double w_s = saturation_humidity_ratio(t_wb, p_atm);
  if (t_wb == t_db) return w_s;
  const double w = ((kLatentAtZero - 2.326 * t_wb) * w_s - kCpDryAir * (t_db - t_wb)) /
                   (kLatentAtZero + kCpVapour * t_db - 4.186 * t_wb);
  if (w < 0.0) throw DomainError("wet-bulb depression too large for this dry bulb");
  return w;
}

double moist_air_enthalpy(double t_db, double w) {
  if (w < 0.0) throw DomainError("humidity ratio must be >= 0");
  return kCpDryAir * t_db + w * (kLatentAtZero + kCpVapour * t_db);
}

double humidity_ratio_from_enthalpy(double t_db, double h) {
  const double w = (h - kCpDryAir * t_db) / (kLatentAtZero + kCpVapour * t_db);
  if (w < 0.0) throw DomainError("enthalpy below the dry-air value at this dry bulb");
  return w;
}

double specific_volume(double t_db, double w, double p_atm) {
  require_pressure(p_atm);
  if (w < 0.0) throw DomainError("humidity ratio must be >= 0");
  return kDryAirGasConstant * (t_db + 273.15) * (1.0 + 1.607858 * w) / p_atm;
}

MoistAirState make_state(double t_db, double w, double p_atm) {
  require_pressure(p_atm);
  if (!std::isfinite(w) || w < 0.0) throw DomainError("humidity ratio must be >= 0");
  if (w > saturation_humidity_ratio(t_db, p_atm) + 1e-6) {
    throw DomainError("supersaturated state at t_db = " + std::to_string(t_db));
  }
  return {t_db, w, p_atm};
}

}  // namespace hpsim::psychro
