#include "hpsim/envelope.hpp"

#include <cmath>
#include <limits>

#include "hpsim/error.hpp"

namespace hpsim::envelope {

namespace {

// Radiant-node weights h_ri A_j. With no radiative coupling at all the row
// would vanish, so the mean falls back to plain area weighting.
std::vector<double> radiant_weights(const ZoneConfig& cfg) {
  std::vector<double> w;
  double total = 0.0;
  for (const auto& wall : cfg.walls) {
    w.push_back(wall.h_ri * wall.area);
    total += w.back();
  }
  if (total <= 0.0) {
    for (std::size_t j = 0; j < cfg.walls.size(); ++j) w[j] = cfg.walls[j].area;
  }
  return w;
}

// inv_dt == 0 drops every capacitive term (steady state).
ThermalSystem assemble(const ZoneConfig& cfg, const EnvelopeState* prev,
                       const BoundarySample& bc, double q_sens, double inv_dt) {
  const std::size_t n = cfg.walls.size();
  ThermalSystem sys{NodeIndex{n}, {}, {}};
  const auto& idx = sys.index;
  sys.matrix = Eigen::MatrixXd::Zero(idx.size(), idx.size());
  sys.rhs = Eigen::VectorXd::Zero(idx.size());
  auto& a = sys.matrix;
  auto& b = sys.rhs;

  const auto prev_si = [&](std::size_t j) { return prev ? prev->t_si[j] : 0.0; };
  const auto prev_se = [&](std::size_t j) { return prev ? prev->t_se[j] : 0.0; };

  double air_diag = cfg.air_capacity * inv_dt + cfg.air_renewal_flow * kCpAir;
  for (std::size_t j = 0; j < n; ++j) {
    const WallSurface& s = cfg.walls[j];
    const double cap_i = s.c_si * s.area * inv_dt;
    const double cap_e = s.c_se * s.area * inv_dt;
    const double ext = (s.h_ce + s.h_re) * s.area;

    a(idx.si(j), idx.si(j)) = cap_i + s.area * (s.h_ci + s.h_ri + s.k_cond);
    a(idx.si(j), idx.air()) = -s.area * s.h_ci;
    a(idx.si(j), idx.radiant()) = -s.area * s.h_ri;
    a(idx.si(j), idx.se(j)) = -s.area * s.k_cond;
    b(idx.si(j)) = cap_i * prev_si(j) + s.solar_aperture_int * bc.g_horiz;

    a(idx.se(j), idx.se(j)) = cap_e + ext + s.area * s.k_cond;
    a(idx.se(j), idx.si(j)) = -s.area * s.k_cond;
    b(idx.se(j)) = cap_e * prev_se(j) + ext * bc.t_ae +
                   s.solar_aperture_ext * bc.g_horiz * s.area;

    a(idx.air(), idx.si(j)) = -s.area * s.h_ci;
    air_diag += s.area * s.h_ci;
  }
  a(idx.air(), idx.air()) = air_diag;
  b(idx.air()) = cfg.air_capacity * inv_dt * (prev ? prev->t_ai : 0.0) +
                 cfg.air_renewal_flow * kCpAir * bc.t_ae + q_sens;

  const auto w = radiant_weights(cfg);
  double w_total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    a(idx.radiant(), idx.si(j)) = w[j];
    w_total += w[j];
  }
  a(idx.radiant(), idx.radiant()) = -w_total;
  return sys;
}

Eigen::VectorXd solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    throw ConfigError("singular thermal network (node without capacity or coupling)");
  }
  Eigen::VectorXd x = lu.solve(b);
  if (!x.allFinite()) throw ConfigError("thermal solve produced non-finite temperatures");
  return x;
}

EnvelopeState unpack(const NodeIndex& idx, const Eigen::VectorXd& x) {
  EnvelopeState s;
  s.t_si.resize(idx.n_walls);
  s.t_se.resize(idx.n_walls);
  for (std::size_t j = 0; j < idx.n_walls; ++j) {
    s.t_si[j] = x(idx.si(j));
    s.t_se[j] = x(idx.se(j));
  }
  s.t_ai = x(idx.air());
  s.t_rm = x(idx.radiant());
  return s;
}

void check_prev(const ZoneConfig& cfg, const EnvelopeState& prev) {
  if (prev.t_si.size() != cfg.walls.size() || prev.t_se.size() != cfg.walls.size()) {
    throw ConfigError("envelope state does not match the wall count");
  }
}

double radiant_scale(const ZoneConfig& cfg) {
  double total = 0.0;
  for (double w : radiant_weights(cfg)) total += w;
  return total;
}

}  // namespace

std::vector<std::string> ZoneConfig::problems() const {
  std::vector<std::string> out;
  if (!(air_capacity > 0.0)) out.emplace_back("zone.air_capacity must be > 0");
  if (!(air_renewal_flow >= 0.0)) out.emplace_back("zone.air_renewal_flow must be >= 0");
  if (!(volume > 0.0)) out.emplace_back("zone.volume must be > 0");
  if (walls.empty()) out.emplace_back("zone.walls must contain at least one wall");
  for (std::size_t j = 0; j < walls.size(); ++j) {
    const auto& s = walls[j];
    const std::string p = "zone.walls[" + std::to_string(j) + "]";
    if (!(s.area > 0.0)) out.push_back(p + ".area must be > 0");
    if (!(s.k_cond > 0.0)) out.push_back(p + ".k_cond must be > 0");
    if (!(s.c_si >= 0.0) || !(s.c_se >= 0.0)) out.push_back(p + " capacitances must be >= 0");
    if (!(s.h_ci >= 0.0) || !(s.h_ce >= 0.0) || !(s.h_ri >= 0.0) || !(s.h_re >= 0.0)) {
      out.push_back(p + " exchange coefficients must be >= 0");
    }
    if (!(s.solar_aperture_ext >= 0.0) || !(s.solar_aperture_int >= 0.0)) {
      out.push_back(p + " solar apertures must be >= 0");
    }
  }
  return out;
}

void ZoneConfig::validate() const {
  auto p = problems();
  if (!p.empty()) throw ValidationError(std::move(p));
}

EnvelopeState EnvelopeState::uniform(std::size_t n_walls, double t) {
  return {std::vector<double>(n_walls, t), std::vector<double>(n_walls, t), t, t};
}

ThermalSystem assemble_thermal_system(const ZoneConfig& cfg, const EnvelopeState& prev,
                                      const BoundarySample& bc, double q_sens_injected,
                                      double dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  check_prev(cfg, prev);
  return assemble(cfg, &prev, bc, q_sens_injected, 1.0 / dt);
}

EnvelopeState step_thermal(const ZoneConfig& cfg, const EnvelopeState& prev,
                           const BoundarySample& bc, double q_sens_injected, double dt) {
  const auto sys = assemble_thermal_system(cfg, prev, bc, q_sens_injected, dt);
  EnvelopeState next = unpack(sys.index, solve(sys.matrix, sys.rhs));
  // The solve satisfies the algebraic row to rounding; re-impose it exactly
  // from the solved surface temperatures so the reported mean is consistent.
  const auto w = radiant_weights(cfg);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    num += w[j] * next.t_si[j];
    den += w[j];
  }
  next.t_rm = num / den;
  return next;
}

EnvelopeState steady_state(const ZoneConfig& cfg, const BoundarySample& bc,
                           double q_sens_injected) {
  bool connected = cfg.air_renewal_flow > 0.0;
  for (const auto& s : cfg.walls) connected = connected || (s.h_ce + s.h_re > 0.0);
  if (!connected) throw ConfigError("zone network has no path to the outdoor boundary");
  const auto sys = assemble(cfg, nullptr, bc, q_sens_injected, 0.0);
  return unpack(sys.index, solve(sys.matrix, sys.rhs));
}

double ideal_zone_sensible_load(const ZoneConfig& cfg, const EnvelopeState& prev,
                                const BoundarySample& bc, double t_set, double dt) {
  auto sys = assemble_thermal_system(cfg, prev, bc, 0.0, dt);
  const std::size_t air = sys.index.air();
  // t_ai becomes a known and the injected load takes its column.
  sys.rhs -= sys.matrix.col(air) * t_set;
  sys.matrix.col(air).setZero();
  sys.matrix(air, air) = -1.0;
  const Eigen::VectorXd x = solve(sys.matrix, sys.rhs);
  return x(air);
}

double radiant_residual(const ZoneConfig& cfg, const EnvelopeState& state) {
  const auto w = radiant_weights(cfg);
  double r = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) r += w[j] * (state.t_si[j] - state.t_rm);
  return r / radiant_scale(cfg);
}

double boundary_heat_flow(const ZoneConfig& cfg, const EnvelopeState& state,
                          const BoundarySample& bc) {
  double q = cfg.air_renewal_flow * kCpAir * (bc.t_ae - state.t_ai);
  for (std::size_t j = 0; j < cfg.walls.size(); ++j) {
    const auto& s = cfg.walls[j];
    q += (s.h_ce + s.h_re) * s.area * (bc.t_ae - state.t_se[j]);
    q += s.solar_aperture_ext * bc.g_horiz * s.area + s.solar_aperture_int * bc.g_horiz;
  }
  return q;
}

}  // namespace hpsim::envelope
