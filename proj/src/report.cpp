#include "hpsim/report.hpp"

#include <cmath>
#include <cstdio>

#include "hpsim/error.hpp"

namespace hpsim {

RunSummary summarize(const NamedRun& run) {
  RunSummary s;
  s.name = run.name;
  s.hours = run.hours.size();
  for (const auto& h : run.hours) {
    s.electric_kwh += h.energy_kwh;
    s.cooling_kwh += -h.q_tot / 1000.0;
    s.sensible_kwh += -h.q_sens / 1000.0;
    s.latent_kwh += -h.q_lat / 1000.0;
    s.cycles += h.cycles;
    s.mean_t_ai += h.t_ai;
  }
  if (s.hours) s.mean_t_ai /= static_cast<double>(s.hours);
  return s;
}

ComparisonReport compare_models(const std::vector<NamedRun>& runs) {
  ComparisonReport report;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    const auto& a = runs[0].hours;
    const auto& b = runs[i].hours;
    bool aligned = a.size() == b.size();
    for (std::size_t k = 0; aligned && k < a.size(); ++k) aligned = a[k].ts == b[k].ts;
    if (!aligned) {
      throw DomainError("run '" + runs[i].name + "' is not aligned with '" + runs[0].name + "'");
    }
  }
  for (const auto& r : runs) report.runs.push_back(summarize(r));

  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      PairComparison p;
      p.reference = runs[i].name;
      p.candidate = runs[j].name;
      const auto& a = runs[i].hours;
      const auto& b = runs[j].hours;
      double sq = 0.0, bias = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = b[k].t_ai - a[k].t_ai;
        sq += d * d;
        bias += d;
      }
      if (!a.empty()) {
        p.rmse_t_ai = std::sqrt(sq / static_cast<double>(a.size()));
        p.bias_t_ai = bias / static_cast<double>(a.size());
      }
      p.electric_kwh_diff = report.runs[j].electric_kwh - report.runs[i].electric_kwh;
      p.cooling_kwh_diff = report.runs[j].cooling_kwh - report.runs[i].cooling_kwh;
      p.cycle_diff = report.runs[j].cycles - report.runs[i].cycles;
      report.pairs.push_back(p);
    }
  }
  return report;
}

std::string format_report(const ComparisonReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %6s %12s %12s %12s %12s %8s %10s\n", "run", "hours",
                "elec_kWh", "cool_kWh", "sens_kWh", "lat_kWh", "cycles", "mean_Tai");
  out += line;
  for (const auto& r : report.runs) {
    std::snprintf(line, sizeof line, "%-16s %6zu %12.3f %12.3f %12.3f %12.3f %8d %10.3f\n",
                  r.name.c_str(), r.hours, r.electric_kwh, r.cooling_kwh, r.sensible_kwh,
                  r.latent_kwh, r.cycles, r.mean_t_ai);
    out += line;
  }
  if (!report.pairs.empty()) {
    out += '\n';
    std::snprintf(line, sizeof line, "%-16s %-16s %10s %10s %12s %12s %8s\n", "reference",
                  "candidate", "rmse_Tai", "bias_Tai", "d_elec_kWh", "d_cool_kWh", "d_cyc");
    out += line;
    for (const auto& p : report.pairs) {
      std::snprintf(line, sizeof line, "%-16s %-16s %10.4f %10.4f %12.3f %12.3f %8d\n",
                    p.reference.c_str(), p.candidate.c_str(), p.rmse_t_ai, p.bias_t_ai,
                    p.electric_kwh_diff, p.cooling_kwh_diff, p.cycle_diff);
      out += line;
    }
  }
  return out;
}

}  // namespace hpsim
