#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Manufacturer performance map of the split unit and its bilinear regression.
//
// At the rating dry bulb (27 degC) total and sensible capacities are taken
// linear in the entering-air enthalpy for each outdoor temperature, and the
// four line coefficients are taken linear in outdoor temperature:
//   q_tot  = c1 + c2 T + (c3 + c4 T) h
//   q_sens = c5 + c6 T + (c7 + c8 T) h
// Electric power is a single line in outdoor temperature.

namespace hpsim::coil {

struct CoilRow {
  double t_ext = 0.0;   // degC outdoor
  double t_wb = 0.0;    // degC indoor wet bulb
  double h_ent = 0.0;   // kJ/kg as printed in the catalogue
  double q_tot = 0.0;   // kW
  double q_sens = 0.0;  // kW
  double power = 0.0;   // kW
};

struct CoilPerformanceTable {
  double t_db_ref = 27.0;
  double bypass_factor = 0.04;
  double airflow = 0.110;  // m3/s
  std::vector<CoilRow> rows;

  std::vector<std::string> problems() const;
  void validate() const;
};

/// Which enthalpy the regression is fitted against.
///  - Psychrometric: recomputed from (t_db_ref, t_wb) with the runtime
///    property functions, so fit and simulation share one convention.
///  - Table: the catalogue's enthalpy column verbatim.
enum class EnthalpySource { Psychrometric, Table };

struct FitOptions {
  EnthalpySource enthalpy = EnthalpySource::Psychrometric;
  double t_ext_max = 35.0;   // rows above are excluded (nonlinear region)
  double t_wb_power = 19.0;  // wet-bulb column used for the power line
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

struct CoilRegression {
  std::array<double, 8> c{};   // c1..c8, kW and kJ/kg based
  double p0 = 0.0;             // kW
  double p1 = 0.0;             // kW/K
  double t_db_ref = 27.0;
  Interval t_ext_range;
  Interval h_ent_range;
};

struct Line {
  double intercept = 0.0;
  double slope = 0.0;
  double operator()(double x) const { return intercept + slope * x; }
};

/// Ordinary least-squares line; throws FitError on fewer than two distinct x.
Line fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct StageOneLine {
  double t_ext = 0.0;
  Line total;      // a0, a1
  Line sensible;   // b0, b1
};

struct GridResidual {
  double t_ext, t_wb, h_ent;
  double q_tot, q_tot_fit;
  double q_sens, q_sens_fit;
};

struct FitReport {
  CoilRegression regression;
  std::vector<StageOneLine> stage_one;
  std::vector<GridResidual> residuals;
  double max_rel_tot = 0.0;
  double max_rel_sens = 0.0;
};

/// Two-stage fit: per outdoor temperature lines in h, then lines in T of the
/// line coefficients, plus the power line. Throws FitError on a degenerate grid.
FitReport fit_capacity_regression_report(const CoilPerformanceTable& table,
                                         const FitOptions& opts = {});
CoilRegression fit_capacity_regression(const CoilPerformanceTable& table,
                                       const FitOptions& opts = {});

/// Enthalpy assigned to a table row under the given convention.
double row_enthalpy(const CoilPerformanceTable& table, const CoilRow& row, EnthalpySource src);

enum Warning : std::uint32_t {
  kNone = 0,
  kEnthalpyClamped = 1u << 0,
  kOutdoorClamped = 1u << 1,
  kDryCoil = 1u << 2,
  kMoistureClamped = 1u << 3,
};

struct ReferenceCapacities {
  double q_tot = 0.0;   // kW
  double q_sens = 0.0;  // kW
  std::uint32_t warnings = kNone;
};

/// Capacities at the rating dry bulb; inputs outside the fitted ranges are
/// evaluated at the nearest boundary and flagged.
ReferenceCapacities capacities_at_reference(const CoilRegression& reg, double h_ent, double t_ext);

struct CoilAirSide {
  double airflow = 0.136;        // m3/s through the indoor coil
  double bypass_factor = 0.04;
  double c_pm = 1.02;            // kJ kg^-1 K^-1
  double t_db_ref = 27.0;
};

/// Sensible capacity at an entering dry bulb other than the rating one, for
/// the same entering enthalpy (same apparatus dew point). v in m3/kg.
double bypass_corrected_sensible(double q_sens_ref, double t_entry, double specific_volume,
                                 const CoilAirSide& air);

struct CapacitySplit {
  double q_sens = 0.0;
  double q_lat = 0.0;
  bool dry_coil = false;
};

/// q_lat = q_tot - q_sens; a negative latent part means a dry coil and is clamped.
CapacitySplit split_capacities(double q_tot, double q_sens_corrected);

double power_at(const CoilRegression& reg, double t_ext);

}  // namespace hpsim::coil
