#pragma once

#include <string>
#include <vector>

#include "hpsim/envelope.hpp"
#include "hpsim/psychro.hpp"
#include "hpsim/timestamp.hpp"

namespace hpsim {

struct WeatherRecord {
  Timestamp ts;
  double t_ae = 0.0;        // degC
  double rh = 0.0;          // fraction
  double g_horiz = 0.0;     // W/m2 global horizontal
  double wind_speed = 0.0;  // m/s, carried but unused by the zone model
};

struct WeatherSeries {
  std::vector<WeatherRecord> records;

  /// Strict hourly spacing, finite values, rh in [0, 1], g >= 0. Row numbers
  /// in messages are 1-based data rows.
  std::vector<std::string> problems() const;
  void validate() const;

  Timestamp start() const { return records.front().ts; }
  Timestamp end() const { return records.back().ts; }
};

struct WeatherSample {
  envelope::BoundarySample bc;
  double w_out = 0.0;  // kg/kg
};

/// Linear interpolation between hourly records; humidity is interpolated as
/// humidity ratio. Throws RangeError outside the series span.
WeatherSample interpolate_weather(const WeatherSeries& series, Timestamp t,
                                  double p_atm = psychro::kStandardPressure);

}  // namespace hpsim
