#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "hpsim/error.hpp"
#include "hpsim/io.hpp"

using namespace hpsim;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path kData = HPSIM_DATA_DIR;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hpsim_test_io";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

json default_json() {
  std::ifstream in(kData / "default_project.json");
  return json::parse(in);
}

// Writes a project next to the shipped data so relative paths still resolve.
fs::path write_project(const json& j, const std::string& name) {
  json copy = j;
  copy["paths"]["weather"] = (kData / "weather_week.csv").string();
  if (copy["paths"].contains("coil_table")) {
    copy["paths"]["coil_table"] = (kData / "table1.csv").string();
  }
  const auto p = scratch(name);
  write_text(p, copy.dump(2));
  return p;
}

std::vector<std::string> problems_of(const fs::path& p) {
  try {
    io::load_project(p);
  } catch (const ValidationError& e) {
    return e.problems();
  }
  return {};
}

bool mentions(const std::vector<std::string>& list, const std::string& needle) {
  for (const auto& s : list) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

std::string weather_text(int rows) {
  std::string s = std::string(io::kWeatherHeader) + "\n";
  for (int i = 0; i < rows; ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "1996-10-20T%02d:00:00,24.0,0.6,0.0,1.0\n", i);
    s += line;
  }
  return s;
}

}  // namespace

TEST_CASE("shipped default project loads cleanly") {
  const auto p = io::load_project(kData / "default_project.json");
  CHECK(p.zone.walls.size() == 6);
  CHECK(p.hvac.model == hvac::HvacModel::Regression);
  REQUIRE(p.hvac.regression.has_value());
  CHECK(p.hvac.regression->p1 > 0.0);
  CHECK(p.sim.dt == 60);
  CHECK(fs::exists(p.weather_file));
  CHECK(p.zone.air_renewal_flow == 0.0);
  CHECK(p.zone.volume == doctest::Approx(20.7));
}

TEST_CASE("model 2 without a coil table names the field") {
  auto j = default_json();
  j["paths"].erase("coil_table");
  const auto probs = problems_of(write_project(j, "no_table.json"));
  REQUIRE_FALSE(probs.empty());
  CHECK(mentions(probs, "paths.coil_table"));
}

TEST_CASE("all invariant violations are reported in one pass") {
  auto j = default_json();
  j["hvac"]["shf"] = 1.2;
  j["hvac"]["cop"] = -1.0;
  j["zone"]["walls"][0]["area_m2"] = -2.0;
  j["sim"]["dt_s"] = 7;
  j["hvac"]["bogus_key"] = 3;
  const auto probs = problems_of(write_project(j, "many.json"));
  CHECK(mentions(probs, "shf"));
  CHECK(mentions(probs, "cop"));
  CHECK(mentions(probs, "walls[0]"));
  CHECK(mentions(probs, "dt"));
  CHECK(mentions(probs, "bogus_key"));
}

TEST_CASE("model 0 without a humidity set point is rejected") {
  auto j = default_json();
  j["hvac"]["model"] = 0;
  j["hvac"].erase("w_set_kg_kg");
  CHECK(mentions(problems_of(write_project(j, "m0.json")), "w_set"));
}

TEST_CASE("malformed JSON reports line and column") {
  const auto p = scratch("broken.json");
  write_text(p, "{\n  \"zone\": {\n    \"volume_m3\": 20.7,,\n  }\n}\n");
  try {
    io::load_project(p);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("broken.json:3:") != std::string::npos);
  }
}

TEST_CASE("overrides re-validate") {
  auto p = io::load_project(kData / "default_project.json");
  io::apply_overrides(p, {30, 1, 24.0});
  CHECK(p.sim.dt == 30);
  CHECK(p.hvac.model == hvac::HvacModel::OnOff);
  CHECK(p.hvac.t_set == 24.0);
  CHECK_THROWS_AS(io::apply_overrides(p, {7, std::nullopt, std::nullopt}), ValidationError);
  auto q = io::load_project(kData / "default_project.json");
  CHECK_THROWS_AS(io::apply_overrides(q, {std::nullopt, 5, std::nullopt}), ValidationError);
}

TEST_CASE("weather CSV ingestion") {
  const auto week = io::load_weather_csv(kData / "weather_week.csv");
  CHECK(week.records.size() == 168);

  const auto bad_rh = scratch("bad_rh.csv");
  std::string text = weather_text(5);
  text.replace(text.find("0.6"), 3, "1.3");
  write_text(bad_rh, text);
  try {
    io::load_weather_csv(bad_rh);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(mentions(e.problems(), "row 1"));
  }

  const auto shuffled = scratch("shuffled.csv");
  std::string s = std::string(io::kWeatherHeader) + "\n";
  s += "1996-10-20T01:00:00,24.0,0.6,0.0,1.0\n";
  s += "1996-10-20T00:00:00,24.0,0.6,0.0,1.0\n";
  s += "1996-10-20T02:00:00,24.0,0.6,0.0,1.0\n";
  write_text(shuffled, s);
  CHECK_THROWS_AS(io::load_weather_csv(shuffled), ValidationError);

  const auto gap = scratch("gap.csv");
  std::string g = weather_text(3);
  g.replace(g.find("T02"), 3, "T03");
  write_text(gap, g);
  try {
    io::load_weather_csv(gap);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(mentions(e.problems(), "row 3"));
  }

  const auto header = scratch("header.csv");
  write_text(header, "time,temp\n1996-10-20T00:00:00,24\n");
  CHECK_THROWS_AS(io::load_weather_csv(header), ParseError);

  const auto garbage = scratch("garbage.csv");
  std::string n = weather_text(3);
  n.replace(n.find("24.0"), 4, "abc");
  write_text(garbage, n);
  CHECK_THROWS_AS(io::load_weather_csv(garbage), ParseError);
}

TEST_CASE("step records round-trip") {
  const auto empty = scratch("empty.csv");
  io::write_records_csv({}, empty);
  std::ifstream in(empty);
  std::string header, extra;
  std::getline(in, header);
  CHECK(header == io::kRecordHeader);
  CHECK_FALSE(std::getline(in, extra));

  std::vector<StepRecord> rec;
  const auto base = parse_timestamp("1996-10-20T00:00:00");
  for (int k = 1; k <= 120; ++k) {
    StepRecord r;
    r.ts = base + std::chrono::minutes{k};
    r.t_ai = 23.0 + 1.0 / 3.0 * std::sin(0.1 * k);
    r.t_rm = 24.0 + 1e-7 * k;
    r.w_zone = 0.0101234567890123;
    r.t_ae = 28.123456789;
    r.is_on = k % 7 < 3;
    r.q_sens = r.is_on ? -2519.987654321 : 0.0;
    r.q_lat = r.is_on ? -780.1 / 3.0 : 0.0;
    r.q_tot = r.q_sens + r.q_lat;
    r.power = r.is_on ? 1249.5 : 0.0;
    r.warnings = static_cast<std::uint32_t>(k % 5);
    rec.push_back(r);
  }
  const auto path = scratch("records.csv");
  io::write_records_csv(rec, path);
  const auto back = io::read_records_csv(path);
  REQUIRE(back.size() == rec.size());
  for (std::size_t k = 0; k < rec.size(); ++k) {
    CHECK(back[k].ts == rec[k].ts);
    CHECK(std::abs(back[k].t_ai - rec[k].t_ai) <= 1e-9);
    CHECK(std::abs(back[k].t_rm - rec[k].t_rm) <= 1e-9);
    CHECK(std::abs(back[k].w_zone - rec[k].w_zone) <= 1e-9);
    CHECK(std::abs(back[k].q_sens - rec[k].q_sens) <= 1e-9);
    CHECK(std::abs(back[k].q_lat - rec[k].q_lat) <= 1e-9);
    CHECK(back[k].q_tot == back[k].q_sens + back[k].q_lat);
    CHECK(back[k].is_on == rec[k].is_on);
    CHECK(back[k].warnings == rec[k].warnings);
  }

  const auto hours = aggregate_hourly(rec).hours;
  const auto hpath = scratch("hourly.csv");
  io::write_hourly_csv(hours, hpath);
  const auto hback = io::read_hourly_csv(hpath);
  REQUIRE(hback.size() == 2);
  CHECK(std::abs(hback[1].power - hours[1].power) <= 1e-9);
  CHECK(hback[1].cycles == hours[1].cycles);
  CHECK(io::read_run_as_hourly(path).size() == 2);
  CHECK(io::read_run_as_hourly(hpath).size() == 2);
}

TEST_CASE("coil table CSV") {
  const auto t = io::load_coil_table_csv(kData / "table1.csv");
  CHECK(t.rows.size() == 30);
  CHECK(t.rows[17].q_tot == 3.30);
  CHECK(t.rows[17].q_sens == 2.52);
  const auto bad = scratch("coil_bad.csv");
  write_text(bad, std::string(io::kCoilHeader) + "\n21,16,45,3.0,3.2,1.0\n");
  CHECK_THROWS_AS(io::load_coil_table_csv(bad), ValidationError);
}
