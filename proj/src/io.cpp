#include "hpsim/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "hpsim/error.hpp"

namespace hpsim::io {

using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(trim(std::string_view(line).substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

double to_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw ParseError(where + ": '" + s + "' is not a number");
  return v;
}

long long to_int(const std::string& s, const std::string& where) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(where + ": '" + s + "' is not an integer");
  }
  return v;
}

// Line-oriented CSV reader: skips blank lines and, before the header, '#'
// comment lines.
struct CsvFile {
  std::vector<std::string> comments;
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, cells)
  std::string header;
};

CsvFile read_csv(const fs::path& path, std::string_view expected_header) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  CsvFile f;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  const auto n_cols = split(std::string(expected_header)).size();
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t.front() == '#') {
        f.comments.push_back(trim(std::string_view(t).substr(1)));
        continue;
      }
      if (t != expected_header) {
        throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected header '" +
                         std::string(expected_header) + "'");
      }
      f.header = t;
      have_header = true;
      continue;
    }
    auto cells = split(t);
    if (cells.size() != n_cols) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(n_cols) + " columns, found " + std::to_string(cells.size()));
    }
    f.rows.emplace_back(lineno, std::move(cells));
  }
  if (!have_header) throw ParseError(path.string() + ": missing header");
  return f;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON field reader that records problems instead of stopping at the first.
class Fields {
 public:
  Fields(const json& obj, std::string path, std::vector<std::string>& problems)
      : obj_(obj), path_(std::move(path)), problems_(problems) {
    if (!obj_.is_object()) problems_.push_back(path_ + ": expected an object");
  }

  ~Fields() = default;

  void finish(std::initializer_list<const char*> extra = {}) {
    if (!obj_.is_object()) return;
    for (const char* e : extra) seen_.insert(e);
    for (const auto& [key, _] : obj_.items()) {
      if (!seen_.count(key)) problems_.push_back(path_ + "." + key + ": unknown field");
    }
  }

  double number(const char* key, double fallback, bool required = true) {
    seen_.insert(key);
    if (!obj_.is_object() || !obj_.contains(key)) {
      if (required) problems_.push_back(path_ + "." + key + ": missing");
      return fallback;
    }
    const auto& v = obj_.at(key);
    if (!v.is_number()) {
      problems_.push_back(path_ + "." + key + ": expected a number");
      return fallback;
    }
    return v.get<double>();
  }

  std::optional<double> optional_number(const char* key) {
    seen_.insert(key);
    if (!obj_.is_object() || !obj_.contains(key) || obj_.at(key).is_null()) return std::nullopt;
    const auto& v = obj_.at(key);
    if (!v.is_number()) {
      problems_.push_back(path_ + "." + key + ": expected a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<std::string> optional_string(const char* key) {
    seen_.insert(key);
    if (!obj_.is_object() || !obj_.contains(key) || obj_.at(key).is_null()) return std::nullopt;
    const auto& v = obj_.at(key);
    if (!v.is_string()) {
      problems_.push_back(path_ + "." + key + ": expected a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  const json* child(const char* key, bool required = true) {
    seen_.insert(key);
    if (!obj_.is_object() || !obj_.contains(key)) {
      if (required) problems_.push_back(path_ + "." + key + ": missing");
      return nullptr;
    }
    return &obj_.at(key);
  }

  const std::string& path() const { return path_; }
  std::vector<std::string>& problems() { return problems_; }

 private:
  const json& obj_;
  std::string path_;
  std::vector<std::string>& problems_;
  std::set<std::string> seen_;
};

envelope::WallSurface read_wall(const json& j, const std::string& path,
                                std::vector<std::string>& problems) {
  Fields f(j, path, problems);
  envelope::WallSurface w;
  w.name = f.optional_string("name").value_or("");
  w.area = f.number("area_m2", 1.0);
  w.k_cond = f.number("k_W_m2K", 1.0);
  w.c_si = f.number("c_si_J_m2K", 0.0);
  w.c_se = f.number("c_se_J_m2K", 0.0);
  w.h_ci = f.number("h_ci_W_m2K", 0.0);
  w.h_ce = f.number("h_ce_W_m2K", 0.0);
  w.h_ri = f.number("h_ri_W_m2K", 0.0);
  w.h_re = f.number("h_re_W_m2K", 0.0);
  w.solar_aperture_ext = f.number("solar_aperture_ext", 0.0, false);
  w.solar_aperture_int = f.number("solar_aperture_int", 0.0, false);
  f.finish();
  return w;
}

void read_zone(const json& j, ProjectConfig& p, std::vector<std::string>& problems) {
  Fields f(j, "zone", problems);
  p.zone.air_capacity = f.number("air_capacity_J_K", 1.0);
  p.zone.air_renewal_flow = f.number("air_renewal_kg_s", 0.0, false);
  p.zone.volume = f.number("volume_m3", 1.0);
  if (const json* walls = f.child("walls")) {
    if (!walls->is_array()) {
      problems.emplace_back("zone.walls: expected an array");
    } else {
      for (std::size_t i = 0; i < walls->size(); ++i) {
        p.zone.walls.push_back(
            read_wall((*walls)[i], "zone.walls[" + std::to_string(i) + "]", problems));
      }
    }
  }
  f.finish();
}

void read_hvac(const json& j, ProjectConfig& p, std::vector<std::string>& problems) {
  Fields f(j, "hvac", problems);
  auto& h = p.hvac;
  const double model = f.number("model", 1.0);
  if (model == 0.0 || model == 1.0 || model == 2.0) {
    h.model = static_cast<hvac::HvacModel>(static_cast<int>(model));
  } else {
    problems.emplace_back("hvac.model: must be 0, 1 or 2");
  }
  h.q_nominal_total = f.number("q_nominal_total_kW", h.q_nominal_total, false);
  h.shf = f.number("shf", h.shf, false);
  h.cop = f.number("cop", h.cop, false);
  h.tau = f.number("tau_s", h.tau, false);
  if (auto mode = f.optional_string("startup_sampling")) {
    if (*mode == "step_mean") {
      h.startup_sampling = hvac::StartupSampling::StepMean;
    } else if (*mode == "point") {
      h.startup_sampling = hvac::StartupSampling::Point;
    } else {
      problems.emplace_back("hvac.startup_sampling: must be 'step_mean' or 'point'");
    }
  }
  h.dead_half_band = f.number("dead_half_band_K", h.dead_half_band, false);
  h.t_set = f.number("t_set_C", h.t_set);
  h.w_set = f.optional_number("w_set_kg_kg");
  h.airflow = f.number("airflow_m3_s", h.airflow, false);
  h.bypass_factor = f.number("bypass_factor", h.bypass_factor, false);
  h.c_pm = f.number("c_pm_kJ_kgK", h.c_pm, false);
  if (auto src = f.optional_string("coil_enthalpy")) {
    if (*src == "psychrometric") {
      p.coil_enthalpy = coil::EnthalpySource::Psychrometric;
    } else if (*src == "table") {
      p.coil_enthalpy = coil::EnthalpySource::Table;
    } else {
      problems.emplace_back("hvac.coil_enthalpy: must be 'psychrometric' or 'table'");
    }
  }
  f.finish();
}

std::optional<Timestamp> read_time(Fields& f, const char* key) {
  const auto s = f.optional_string(key);
  if (!s) return std::nullopt;
  try {
    return parse_timestamp(*s);
  } catch (const ParseError& e) {
    f.problems().push_back(f.path() + "." + key + ": " + e.what());
    return std::nullopt;
  }
}

void read_sim(const json& j, ProjectConfig& p, std::vector<std::string>& problems) {
  Fields f(j, "sim", problems);
  auto& s = p.sim;
  const double dt = f.number("dt_s", 60.0, false);
  s.dt = static_cast<int>(dt);
  if (dt != static_cast<double>(s.dt)) problems.emplace_back("sim.dt_s: must be an integer");
  s.start = read_time(f, "start");
  s.end = read_time(f, "end");
  s.initial_t = f.optional_number("initial_t_C");
  s.initial_rh = f.optional_number("initial_rh");
  s.p_atm = f.number("p_atm_kPa", s.p_atm, false);
  s.latent_heat = f.number("latent_heat_J_kg", s.latent_heat, false);
  f.finish();
}

void read_paths(const json& j, const fs::path& base, ProjectConfig& p,
                std::vector<std::string>& problems) {
  Fields f(j, "paths", problems);
  const auto resolve = [&](const std::string& s) {
    fs::path q(s);
    return q.is_absolute() ? q : base / q;
  };
  if (auto w = f.optional_string("weather")) {
    p.weather_file = resolve(*w);
  } else {
    problems.emplace_back("paths.weather: missing");
  }
  if (auto c = f.optional_string("coil_table")) p.coil_table_file = resolve(*c);
  p.output_dir = resolve(f.optional_string("output_dir").value_or("out"));
  f.finish();
}

void fit_coil_if_named(ProjectConfig& p, std::vector<std::string>& problems) {
  p.hvac.regression.reset();
  if (!p.coil_table_file || !fs::exists(*p.coil_table_file)) return;
  try {
    const auto table = load_coil_table_csv(*p.coil_table_file);
    coil::FitOptions opts;
    opts.enthalpy = p.coil_enthalpy;
    p.hvac.regression = coil::fit_capacity_regression(table, opts);
  } catch (const ValidationError& e) {
    for (const auto& m : e.problems()) problems.push_back(m);
  } catch (const std::exception& e) {
    problems.push_back(std::string("paths.coil_table: ") + e.what());
  }
}

}  // namespace

std::vector<std::string> project_problems(const ProjectConfig& p) {
  std::vector<std::string> out = p.zone.problems();
  for (auto& m : p.sim.problems()) out.push_back(std::move(m));
  for (auto& m : p.hvac.problems()) {
    if (m.rfind("hvac.regression", 0) == 0) continue;  // reported against the path below
    out.push_back(std::move(m));
  }
  if (p.weather_file.empty() || !fs::exists(p.weather_file)) {
    out.push_back("paths.weather: file not found: " + p.weather_file.string());
  }
  if (p.hvac.model == hvac::HvacModel::Regression) {
    if (!p.coil_table_file) {
      out.emplace_back("paths.coil_table: required by hvac.model = 2");
    } else if (!fs::exists(*p.coil_table_file)) {
      out.push_back("paths.coil_table: file not found: " + p.coil_table_file->string());
    }
  }
  if (p.coil_table_file && !fs::exists(*p.coil_table_file) &&
      p.hvac.model != hvac::HvacModel::Regression) {
    out.push_back("paths.coil_table: file not found: " + p.coil_table_file->string());
  }
  return out;
}

ProjectConfig load_project(const fs::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + e.what());
  }

  ProjectConfig p;
  std::vector<std::string> problems;
  const fs::path base = path.parent_path();
  Fields root(doc, "project", problems);
  if (const json* z = root.child("zone")) read_zone(*z, p, problems);
  if (const json* h = root.child("hvac")) read_hvac(*h, p, problems);
  if (const json* s = root.child("sim", false)) read_sim(*s, p, problems);
  if (const json* pa = root.child("paths")) read_paths(*pa, base, p, problems);
  root.finish({"description"});

  fit_coil_if_named(p, problems);
  for (auto& m : project_problems(p)) problems.push_back(std::move(m));
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return p;
}

void apply_overrides(ProjectConfig& p, const Overrides& o) {
  std::vector<std::string> problems;
  if (o.dt) p.sim.dt = *o.dt;
  if (o.model) {
    if (*o.model < 0 || *o.model > 2) {
      problems.emplace_back("--model: must be 0, 1 or 2");
    } else {
      p.hvac.model = static_cast<hvac::HvacModel>(*o.model);
    }
  }
  if (o.t_set) p.hvac.t_set = *o.t_set;
  for (auto& m : project_problems(p)) problems.push_back(std::move(m));
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

WeatherSeries load_weather_csv(const fs::path& path) {
  const auto csv = read_csv(path, kWeatherHeader);
  WeatherSeries series;
  for (const auto& [line, c] : csv.rows) {
    const std::string where = path.string() + ":" + std::to_string(line);
    WeatherRecord r;
    try {
      r.ts = parse_timestamp(c[0]);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    r.t_ae = to_double(c[1], where);
    r.rh = to_double(c[2], where);
    r.g_horiz = to_double(c[3], where);
    r.wind_speed = to_double(c[4], where);
    series.records.push_back(r);
  }
  series.validate();
  return series;
}

coil::CoilPerformanceTable load_coil_table_csv(const fs::path& path) {
  const auto csv = read_csv(path, kCoilHeader);
  coil::CoilPerformanceTable table;
  for (const auto& comment : csv.comments) {
    const auto eq = comment.find('=');
    if (eq == std::string::npos) continue;
    const auto key = trim(std::string_view(comment).substr(0, eq));
    const auto value = trim(std::string_view(comment).substr(eq + 1));
    const std::string where = path.string() + ": " + key;
    if (key == "t_db_ref") table.t_db_ref = to_double(value, where);
    if (key == "bypass_factor") table.bypass_factor = to_double(value, where);
    if (key == "airflow_m3_s") table.airflow = to_double(value, where);
  }
  for (const auto& [line, c] : csv.rows) {
    const std::string where = path.string() + ":" + std::to_string(line);
    table.rows.push_back({to_double(c[0], where), to_double(c[1], where), to_double(c[2], where),
                          to_double(c[3], where), to_double(c[4], where), to_double(c[5], where)});
  }
  table.validate();
  return table;
}

void write_records_csv(const std::vector<StepRecord>& records, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    out << format_timestamp(r.ts) << ',' << num(r.t_ai) << ',' << num(r.t_rm) << ','
        << num(r.w_zone) << ',' << num(r.t_ae) << ',' << (r.is_on ? 1 : 0) << ','
        << num(r.q_sens) << ',' << num(r.q_lat) << ',' << num(r.q_tot) << ',' << num(r.power)
        << ',' << r.warnings << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<StepRecord> read_records_csv(const fs::path& path) {
  const auto csv = read_csv(path, kRecordHeader);
  std::vector<StepRecord> out;
  for (const auto& [line, c] : csv.rows) {
    const std::string where = path.string() + ":" + std::to_string(line);
    StepRecord r;
    r.ts = parse_timestamp(c[0]);
    r.t_ai = to_double(c[1], where);
    r.t_rm = to_double(c[2], where);
    r.w_zone = to_double(c[3], where);
    r.t_ae = to_double(c[4], where);
    r.is_on = to_int(c[5], where) != 0;
    r.q_sens = to_double(c[6], where);
    r.q_lat = to_double(c[7], where);
    r.q_tot = to_double(c[8], where);
    r.power = to_double(c[9], where);
    r.warnings = static_cast<std::uint32_t>(to_int(c[10], where));
    out.push_back(r);
  }
  return out;
}

void write_hourly_csv(const std::vector<HourlyRecord>& hours, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kHourlyHeader << '\n';
  for (const auto& h : hours) {
    out << format_timestamp(h.ts) << ',' << num(h.t_ai) << ',' << num(h.t_rm) << ','
        << num(h.w_zone) << ',' << num(h.t_ae) << ',' << num(h.duty_cycle) << ',' << h.cycles
        << ',' << num(h.q_sens) << ',' << num(h.q_lat) << ',' << num(h.q_tot) << ','
        << num(h.power) << ',' << num(h.energy_kwh) << ',' << h.warnings << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<HourlyRecord> read_hourly_csv(const fs::path& path) {
  const auto csv = read_csv(path, kHourlyHeader);
  std::vector<HourlyRecord> out;
  for (const auto& [line, c] : csv.rows) {
    const std::string where = path.string() + ":" + std::to_string(line);
    HourlyRecord h;
    h.ts = parse_timestamp(c[0]);
    h.t_ai = to_double(c[1], where);
    h.t_rm = to_double(c[2], where);
    h.w_zone = to_double(c[3], where);
    h.t_ae = to_double(c[4], where);
    h.duty_cycle = to_double(c[5], where);
    h.cycles = static_cast<int>(to_int(c[6], where));
    h.q_sens = to_double(c[7], where);
    h.q_lat = to_double(c[8], where);
    h.q_tot = to_double(c[9], where);
    h.power = to_double(c[10], where);
    h.energy_kwh = to_double(c[11], where);
    h.warnings = static_cast<std::uint32_t>(to_int(c[12], where));
    out.push_back(h);
  }
  return out;
}

std::vector<HourlyRecord> read_run_as_hourly(const fs::path& path, int* dropped) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string first;
  while (std::getline(in, first) && trim(first).empty()) {
  }
  if (trim(first) == kHourlyHeader) {
    if (dropped) *dropped = 0;
    return read_hourly_csv(path);
  }
  auto agg = aggregate_hourly(read_records_csv(path));
  if (dropped) *dropped = agg.dropped_partial_hours;
  return agg.hours;
}

}  // namespace hpsim::io
