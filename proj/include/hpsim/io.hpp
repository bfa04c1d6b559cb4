#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hpsim/coil.hpp"
#include "hpsim/envelope.hpp"
#include "hpsim/hvac.hpp"
#include "hpsim/simulator.hpp"
#include "hpsim/weather.hpp"

namespace hpsim::io {

namespace fs = std::filesystem;

struct ProjectConfig {
  envelope::ZoneConfig zone;
  hvac::HvacConfig hvac;
  SimConfig sim;
  coil::EnthalpySource coil_enthalpy = coil::EnthalpySource::Psychrometric;
  fs::path weather_file;
  std::optional<fs::path> coil_table_file;
  fs::path output_dir;
};

/// Reads and validates a JSON project file. Relative paths resolve against the
/// file's directory. When a coil table is named it is loaded and fitted so the
/// unit config is complete. Throws ParseError (with line/column) or
/// ValidationError listing every problem found.
ProjectConfig load_project(const fs::path& path);

struct Overrides {
  std::optional<int> dt;
  std::optional<int> model;
  std::optional<double> t_set;
};

/// Applies command-line overrides and re-runs the cross-field checks.
void apply_overrides(ProjectConfig& project, const Overrides& o);

/// Cross-field validation of an assembled project; empty when valid.
std::vector<std::string> project_problems(const ProjectConfig& project);

inline constexpr const char* kWeatherHeader = "timestamp,t_ae_C,rh,g_horiz_W_m2,wind_speed_m_s";
inline constexpr const char* kCoilHeader = "t_ext,t_wb,h_ent,q_tot_kW,q_sens_kW,power_kW";
inline constexpr const char* kRecordHeader =
    "timestamp,t_ai_C,t_rm_C,w_zone_kg_kg,t_ae_C,is_on,q_sens_W,q_lat_W,q_tot_W,power_W,warnings";
inline constexpr const char* kHourlyHeader =
    "timestamp,t_ai_C,t_rm_C,w_zone_kg_kg,t_ae_C,duty_cycle,cycles,q_sens_W,q_lat_W,q_tot_W,"
    "power_W,energy_kWh,warnings";

WeatherSeries load_weather_csv(const fs::path& path);

/// "# key = value" lines before the header carry t_db_ref, bypass_factor and
/// airflow_m3_s.
coil::CoilPerformanceTable load_coil_table_csv(const fs::path& path);

void write_records_csv(const std::vector<StepRecord>& records, const fs::path& path);
std::vector<StepRecord> read_records_csv(const fs::path& path);

void write_hourly_csv(const std::vector<HourlyRecord>& hours, const fs::path& path);
std::vector<HourlyRecord> read_hourly_csv(const fs::path& path);

/// Reads either a step-record or an hourly CSV and returns hourly records.
std::vector<HourlyRecord> read_run_as_hourly(const fs::path& path, int* dropped = nullptr);

}  // namespace hpsim::io
