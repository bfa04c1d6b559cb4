#include "hpsim/weather.hpp"

#include <cmath>

#include "hpsim/error.hpp"

namespace hpsim {

std::vector<std::string> WeatherSeries::problems() const {
  std::vector<std::string> out;
  if (records.size() < 2) out.emplace_back("weather: need at least two hourly records");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string row = "weather row " + std::to_string(i + 1);
    if (!std::isfinite(r.t_ae) || !std::isfinite(r.rh) || !std::isfinite(r.g_horiz) ||
        !std::isfinite(r.wind_speed)) {
      out.push_back(row + ": non-finite value");
    }
    if (!(r.rh >= 0.0 && r.rh <= 1.0)) out.push_back(row + ": rh outside [0, 1]");
    if (!(r.g_horiz >= 0.0)) out.push_back(row + ": negative irradiance");
    if (i > 0) {
      const auto step = seconds_between(records[i - 1].ts, r.ts);
      if (step <= 0) {
        out.push_back(row + ": timestamp not strictly increasing");
      } else if (step != 3600) {
        out.push_back(row + ": gap of " + std::to_string(step) + " s (hourly spacing required)");
      }
    }
  }
  return out;
}

void WeatherSeries::validate() const {
  auto p = problems();
  if (!p.empty()) throw ValidationError(std::move(p));
}

WeatherSample interpolate_weather(const WeatherSeries& series, Timestamp t, double p_atm) {
  if (series.records.empty() || t < series.start() || t > series.end()) {
    throw RangeError("time " + format_timestamp(t) + " outside the weather series");
  }
  const auto offset = seconds_between(series.start(), t);
  auto i = static_cast<std::size_t>(offset / 3600);
  if (i + 1 >= series.records.size()) i = series.records.size() - 2;
  const auto& a = series.records[i];
  const auto& b = series.records[i + 1];
  const double f = static_cast<double>(seconds_between(a.ts, t)) / 3600.0;
  const auto lerp = [f](double x, double y) { return f == 0.0 ? x : (f == 1.0 ? y : x + f * (y - x)); };
  const double wa = psychro::humidity_ratio_from_rh(a.t_ae, a.rh, p_atm);
  const double wb = psychro::humidity_ratio_from_rh(b.t_ae, b.rh, p_atm);
  return {{lerp(a.t_ae, b.t_ae), lerp(a.g_horiz, b.g_horiz)}, lerp(wa, wb)};
}

}  // namespace hpsim
