#include "hpsim/coil.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hpsim/error.hpp"
#include "hpsim/psychro.hpp"

namespace hpsim::coil {

std::vector<std::string> CoilPerformanceTable::problems() const {
  std::vector<std::string> out;
  if (!(bypass_factor >= 0.0 && bypass_factor < 1.0)) {
    out.emplace_back("coil table: bypass factor must be in [0, 1)");
  }
  if (!(airflow > 0.0)) out.emplace_back("coil table: airflow must be > 0");
  if (rows.empty()) out.emplace_back("coil table: no rows");
  std::set<double> t_ext, t_wb;
  std::set<std::pair<double, double>> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const std::string p = "coil table row " + std::to_string(i + 1);
    if (!(r.q_sens > 0.0 && r.q_sens <= r.q_tot)) out.push_back(p + ": need 0 < q_sens <= q_tot");
    if (!(r.power > 0.0)) out.push_back(p + ": power must be > 0");
    if (!cells.insert({r.t_ext, r.t_wb}).second) out.push_back(p + ": duplicate grid point");
    t_ext.insert(r.t_ext);
    t_wb.insert(r.t_wb);
  }
  if (!rows.empty() && cells.size() != t_ext.size() * t_wb.size()) {
    out.emplace_back("coil table: rows do not cover a rectangular (t_ext, t_wb) grid");
  }
  return out;
}

void CoilPerformanceTable::validate() const {
  auto p = problems();
  if (!p.empty()) throw ValidationError(std::move(p));
}

Line fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw FitError("fit_line: size mismatch");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  // Centered sums vanish iff all abscissae coincide.
  if (x.size() < 2 || !(sxx > 1e-12 * std::max(1.0, mx * mx) * n)) {
    throw FitError("least-squares line needs at least two distinct abscissae");
  }
  const double slope = sxy / sxx;
  return {my - slope * mx, slope};
}

double row_enthalpy(const CoilPerformanceTable& table, const CoilRow& row, EnthalpySource src) {
  if (src == EnthalpySource::Table) return row.h_ent;
  const double w = psychro::humidity_ratio_from_wetbulb(table.t_db_ref, row.t_wb);
  return psychro::moist_air_enthalpy(table.t_db_ref, w);
}

FitReport fit_capacity_regression_report(const CoilPerformanceTable& table,
                                         const FitOptions& opts) {
  table.validate();

  struct Column {
    std::vector<double> h, q_tot, q_sens;
  };
  std::map<double, Column> by_t_ext;
  std::vector<double> power_t, power_kw;
  Interval h_range{INFINITY, -INFINITY};
  for (const auto& row : table.rows) {
    if (row.t_ext > opts.t_ext_max) continue;
    const double h = row_enthalpy(table, row, opts.enthalpy);
    auto& col = by_t_ext[row.t_ext];
    col.h.push_back(h);
    col.q_tot.push_back(row.q_tot);
    col.q_sens.push_back(row.q_sens);
    h_range.lo = std::min(h_range.lo, h);
    h_range.hi = std::max(h_range.hi, h);
    if (std::abs(row.t_wb - opts.t_wb_power) < 1e-9) {
      power_t.push_back(row.t_ext);
      power_kw.push_back(row.power);
    }
  }
  if (by_t_ext.size() < 2) {
    throw FitError("coil fit needs at least two outdoor temperatures within range");
  }

  FitReport report;
  std::vector<double> t, a0, a1, b0, b1;
  for (const auto& [t_ext, col] : by_t_ext) {
    StageOneLine line{t_ext, fit_line(col.h, col.q_tot), fit_line(col.h, col.q_sens)};
    report.stage_one.push_back(line);
    t.push_back(t_ext);
    a0.push_back(line.total.intercept);
    a1.push_back(line.total.slope);
    b0.push_back(line.sensible.intercept);
    b1.push_back(line.sensible.slope);
  }
  const Line la0 = fit_line(t, a0), la1 = fit_line(t, a1);
  const Line lb0 = fit_line(t, b0), lb1 = fit_line(t, b1);
  if (power_t.size() < 2) {
    throw FitError("coil fit needs the power column at the reference wet bulb");
  }
  const Line power = fit_line(power_t, power_kw);

  CoilRegression& reg = report.regression;
  reg.c = {la0.intercept, la0.slope, la1.intercept, la1.slope,
           lb0.intercept, lb0.slope, lb1.intercept, lb1.slope};
  reg.p0 = power.intercept;
  reg.p1 = power.slope;
  reg.t_db_ref = table.t_db_ref;
  reg.t_ext_range = {t.front(), t.back()};
  reg.h_ent_range = h_range;

  for (const auto& row : table.rows) {
    if (row.t_ext > opts.t_ext_max) continue;
    const double h = row_enthalpy(table, row, opts.enthalpy);
    const auto fit = capacities_at_reference(reg, h, row.t_ext);
    report.residuals.push_back(
        {row.t_ext, row.t_wb, h, row.q_tot, fit.q_tot, row.q_sens, fit.q_sens});
    report.max_rel_tot = std::max(report.max_rel_tot, std::abs(fit.q_tot - row.q_tot) / row.q_tot);
    report.max_rel_sens =
        std::max(report.max_rel_sens, std::abs(fit.q_sens - row.q_sens) / row.q_sens);
  }
  return report;
}

CoilRegression fit_capacity_regression(const CoilPerformanceTable& table, const FitOptions& opts) {
  return fit_capacity_regression_report(table, opts).regression;
}

ReferenceCapacities capacities_at_reference(const CoilRegression& reg, double h_ent,
                                            double t_ext) {
  ReferenceCapacities out;
  if (!reg.h_ent_range.contains(h_ent)) out.warnings |= kEnthalpyClamped;
  if (!reg.t_ext_range.contains(t_ext)) out.warnings |= kOutdoorClamped;
  const double h = reg.h_ent_range.clamp(h_ent);
  const double t = reg.t_ext_range.clamp(t_ext);
  const auto& c = reg.c;
  out.q_tot = c[0] + c[1] * t + (c[2] + c[3] * t) * h;
  out.q_sens = c[4] + c[5] * t + (c[6] + c[7] * t) * h;
  return out;
}

double bypass_corrected_sensible(double q_sens_ref, double t_entry, double specific_volume,
                                 const CoilAirSide& air) {
  if (!(specific_volume > 0.0)) throw DomainError("specific volume must be > 0");
  const double m_dot = air.airflow / specific_volume;  // kg/s
  return q_sens_ref + m_dot * air.c_pm * (1.0 - air.bypass_factor) * (air.t_db_ref - t_entry);
}

CapacitySplit split_capacities(double q_tot, double q_sens_corrected) {
  if (!(q_tot > 0.0)) throw DomainError("total capacity must be > 0");
  const double q_sens = std::max(q_sens_corrected, 0.0);
  const double q_lat = q_tot - q_sens;
  if (q_lat < 0.0) return {q_tot, 0.0, true};
  return {q_sens, q_lat, false};
}

double power_at(const CoilRegression& reg, double t_ext) { return reg.p0 + reg.p1 * t_ext; }

}  // namespace hpsim::coil
