#pragma once

#include <string>
#include <vector>

#include "hpsim/simulator.hpp"

namespace hpsim {

struct NamedRun {
  std::string name;
  std::vector<HourlyRecord> hours;
};

struct RunSummary {
  std::string name;
  std::size_t hours = 0;
  double electric_kwh = 0.0;
  double cooling_kwh = 0.0;   // total (sensible + latent) extracted
  double sensible_kwh = 0.0;
  double latent_kwh = 0.0;
  int cycles = 0;
  double mean_t_ai = 0.0;
};

struct PairComparison {
  std::string reference;
  std::string candidate;
  double rmse_t_ai = 0.0;
  double bias_t_ai = 0.0;  // candidate - reference
  double electric_kwh_diff = 0.0;
  double cooling_kwh_diff = 0.0;
  int cycle_diff = 0;
};

struct ComparisonReport {
  std::vector<RunSummary> runs;
  std::vector<PairComparison> pairs;  // every (i, j) with i < j
};

RunSummary summarize(const NamedRun& run);

/// Throws DomainError when the runs do not share the same hourly timestamps.
ComparisonReport compare_models(const std::vector<NamedRun>& runs);

std::string format_report(const ComparisonReport& report);

}  // namespace hpsim
