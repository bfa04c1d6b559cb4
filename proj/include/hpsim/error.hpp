#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hpsim {

/// Argument outside the domain of a property correlation or model law.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Physically inconsistent configuration (singular network, disconnected zone...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares fit could not be formed (degenerate grid).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Query outside the span of a time series.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input file could not be parsed or read.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Aggregated list of validation failures; all problems found in one pass.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += '\n';
      out += item;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

}  // namespace hpsim

namespace hpsim {

/// Failure inside the time loop; the message carries the offending timestamp.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hpsim
