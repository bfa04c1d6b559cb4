#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

// R2C nodal network of a single conditioned zone.
//
// Each wall carries two surface nodes (inside t_si, outside t_se) joined by a
// single conductance K; areal capacitances sit on the surface nodes. The zone
// air node exchanges with every inside surface by convection and with the
// outdoor air through the renewal flow. The mean radiant node is algebraic:
// sum_j h_ri A_j (t_si_j - t_rm) = 0.
//
// Time advance is backward Euler; every flux is evaluated at the new level.

namespace hpsim::envelope {

inline constexpr double kCpAir = 1006.0;  // J kg^-1 K^-1, ventilation term

struct WallSurface {
  std::string name;
  double area = 0.0;                 // m2
  double k_cond = 0.0;               // W m^-2 K^-1
  double c_si = 0.0;                 // J m^-2 K^-1
  double c_se = 0.0;                 // J m^-2 K^-1
  double h_ci = 0.0;                 // W m^-2 K^-1
  double h_ce = 0.0;
  double h_ri = 0.0;
  double h_re = 0.0;
  double solar_aperture_ext = 0.0;   // absorbed exterior flux per unit area / G
  double solar_aperture_int = 0.0;   // absorbed interior flux [W] / G [W/m2]
};

struct ZoneConfig {
  double air_capacity = 0.0;       // J/K
  double air_renewal_flow = 0.0;   // kg/s of outdoor air
  double volume = 0.0;             // m3
  std::vector<WallSurface> walls;

  /// Returns every violated invariant; empty when valid.
  std::vector<std::string> problems() const;
  void validate() const;
};

struct EnvelopeState {
  std::vector<double> t_si;
  std::vector<double> t_se;
  double t_ai = 0.0;
  double t_rm = 0.0;

  static EnvelopeState uniform(std::size_t n_walls, double t);
};

struct BoundarySample {
  double t_ae = 0.0;     // degC
  double g_horiz = 0.0;  // W/m2
};

/// Unknown ordering: t_si[0..n), t_se[0..n), t_ai, t_rm.
struct NodeIndex {
  std::size_t n_walls = 0;
  std::size_t si(std::size_t j) const { return j; }
  std::size_t se(std::size_t j) const { return n_walls + j; }
  std::size_t air() const { return 2 * n_walls; }
  std::size_t radiant() const { return 2 * n_walls + 1; }
  std::size_t size() const { return 2 * n_walls + 2; }
};

struct ThermalSystem {
  NodeIndex index;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

/// Linear system for one implicit step of length dt [s].
ThermalSystem assemble_thermal_system(const ZoneConfig& cfg, const EnvelopeState& prev,
                                      const BoundarySample& bc, double q_sens_injected,
                                      double dt);

EnvelopeState step_thermal(const ZoneConfig& cfg, const EnvelopeState& prev,
                           const BoundarySample& bc, double q_sens_injected, double dt);

/// dt -> infinity limit: capacitances dropped, algebraic solve.
EnvelopeState steady_state(const ZoneConfig& cfg, const BoundarySample& bc,
                           double q_sens_injected);

/// Sensible injection [W] that brings t_ai to t_set at the end of the step.
double ideal_zone_sensible_load(const ZoneConfig& cfg, const EnvelopeState& prev,
                                const BoundarySample& bc, double t_set, double dt);

/// Residual of the radiant-node constraint for a given state [W].
double radiant_residual(const ZoneConfig& cfg, const EnvelopeState& state);

/// Net heat flow from the boundary (outdoor air, solar) into the network [W].
double boundary_heat_flow(const ZoneConfig& cfg, const EnvelopeState& state,
                          const BoundarySample& bc);

}  // namespace hpsim::envelope
