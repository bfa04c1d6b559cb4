#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace hpsim {

using Timestamp = std::chrono::sys_seconds;

/// Parses "YYYY-MM-DDTHH:MM:SS" (a space separator and a trailing 'Z' are
/// accepted). Throws ParseError.
Timestamp parse_timestamp(std::string_view text);

/// Formats as "YYYY-MM-DDTHH:MM:SS".
std::string format_timestamp(Timestamp ts);

inline long long seconds_between(Timestamp a, Timestamp b) { return (b - a).count(); }

}  // namespace hpsim
