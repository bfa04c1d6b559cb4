#include "hpsim/timestamp.hpp"

#include <charconv>
#include <cstdio>

#include "hpsim/error.hpp"

namespace hpsim {

namespace {

int field(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  const char* first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc{} || ptr != first + len) {
    throw ParseError("malformed timestamp '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
  if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != ' ') || text[13] != ':' || text[16] != ':') {
    throw ParseError("malformed timestamp '" + std::string(text) + "'");
  }
  using namespace std::chrono;
  const year_month_day ymd{year{field(text, 0, 4)}, month{static_cast<unsigned>(field(text, 5, 2))},
                           day{static_cast<unsigned>(field(text, 8, 2))}};
  const int hh = field(text, 11, 2), mm = field(text, 14, 2), ss = field(text, 17, 2);
  if (!ymd.ok() || hh > 23 || mm > 59 || ss > 59) {
    throw ParseError("invalid calendar time '" + std::string(text) + "'");
  }
  return sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss};
}

std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  const auto day_point = floor<days>(ts);
  const year_month_day ymd{day_point};
  const hh_mm_ss hms{ts - day_point};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ld", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                static_cast<long>(hms.seconds().count()));
  return buf;
}

}  // namespace hpsim
