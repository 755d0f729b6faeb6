#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace canet {

// Seconds since the Unix epoch, UTC. Second granularity is all the input
// formats carry.
using Instant = std::int64_t;

constexpr std::int64_t kSecondsPerDay = 86400;

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  friend bool operator==(const CivilDate&, const CivilDate&) = default;
};

enum class DatePrecision { Day, Month, Year };

// Proleptic Gregorian <-> days since 1970-01-01.
std::int64_t days_from_civil(int y, int m, int d);
CivilDate civil_from_days(std::int64_t days);

bool is_valid_date(int y, int m, int d);

Instant instant_from_civil(const CivilDate& date);
CivilDate civil_of(Instant t);

// RFC 3339 timestamp, e.g. "2017-01-05T09:30:00Z". Numeric offsets are
// normalized to UTC, fractional seconds truncated.
std::optional<Instant> parse_rfc3339(const std::string& s);
std::string format_rfc3339(Instant t);

// "2002", "2002-05" or "2002-05-15". Partial dates complete to the first
// day of the period; the precision actually given is reported alongside.
std::optional<std::pair<CivilDate, DatePrecision>> parse_partial_date(const std::string& s);
std::string format_civil(const CivilDate& d);
std::string format_partial_date(const CivilDate& d, DatePrecision p);

enum class BinWidth { Day, Week, Month };

// Start of the calendar bin containing t (weeks start Monday, UTC).
Instant bin_floor(Instant t, BinWidth w);
Instant bin_next(Instant start, BinWidth w);

const char* bin_width_name(BinWidth w);
std::optional<BinWidth> bin_width_from_name(const std::string& name);

}  // namespace canet
