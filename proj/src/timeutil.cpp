#include "canet/timeutil.hpp"

#include <cstdio>
#include <cstdlib>

namespace canet {

// Howard Hinnant's civil-date algorithms; valid far beyond the range we need.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);            // [0, 399]
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

bool is_valid_date(int y, int m, int d) {
  if (m < 1 || m > 12 || d < 1) return false;
  static const int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int dim = mdays[m - 1];
  const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) dim = 29;
  return d <= dim;
}

Instant instant_from_civil(const CivilDate& date) {
  return days_from_civil(date.year, date.month, date.day) * kSecondsPerDay;
}

CivilDate civil_of(Instant t) {
  std::int64_t days = t / kSecondsPerDay;
  if (t < 0 && t % kSecondsPerDay != 0) --days;
  return civil_from_days(days);
}

namespace {

bool read_int(const std::string& s, size_t pos, size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int v = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::optional<Instant> parse_rfc3339(const std::string& s) {
  // YYYY-MM-DD 'T' hh:mm:ss [.frac] ( 'Z' | ±hh:mm )
  int Y, M, D, h, m, sec;
  if (!read_int(s, 0, 4, Y) || s.size() < 20 || s[4] != '-' ||
      !read_int(s, 5, 2, M) || s[7] != '-' || !read_int(s, 8, 2, D))
    return std::nullopt;
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
  if (!read_int(s, 11, 2, h) || s[13] != ':' || !read_int(s, 14, 2, m) ||
      s[16] != ':' || !read_int(s, 17, 2, sec))
    return std::nullopt;
  if (!is_valid_date(Y, M, D) || h > 23 || m > 59 || sec > 60) return std::nullopt;
  if (sec == 60) sec = 59;  // leap seconds collapse

  size_t p = 19;
  if (p < s.size() && s[p] == '.') {
    ++p;
    size_t digits = 0;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p, ++digits;
    if (digits == 0) return std::nullopt;
  }
  if (p >= s.size()) return std::nullopt;

  std::int64_t offset = 0;
  if (s[p] == 'Z' || s[p] == 'z') {
    ++p;
  } else if (s[p] == '+' || s[p] == '-') {
    int oh, om;
    if (!read_int(s, p + 1, 2, oh) || p + 3 >= s.size() || s[p + 3] != ':' ||
        !read_int(s, p + 4, 2, om) || oh > 23 || om > 59)
      return std::nullopt;
    offset = (oh * 3600 + om * 60) * (s[p] == '+' ? 1 : -1);
    p += 6;
  } else {
    return std::nullopt;
  }
  if (p != s.size()) return std::nullopt;

  return days_from_civil(Y, M, D) * kSecondsPerDay + h * 3600 + m * 60 + sec - offset;
}

std::string format_rfc3339(Instant t) {
  const CivilDate d = civil_of(t);
  std::int64_t rem = t - instant_from_civil(d);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", d.year, d.month, d.day,
                static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                static_cast<int>(rem % 60));
  return buf;
}

std::optional<std::pair<CivilDate, DatePrecision>> parse_partial_date(const std::string& s) {
  int Y, M = 1, D = 1;
  if (s.size() == 4) {
    if (!read_int(s, 0, 4, Y)) return std::nullopt;
    return std::make_pair(CivilDate{Y, 1, 1}, DatePrecision::Year);
  }
  if (s.size() == 7) {
    if (!read_int(s, 0, 4, Y) || s[4] != '-' || !read_int(s, 5, 2, M)) return std::nullopt;
    if (M < 1 || M > 12) return std::nullopt;
    return std::make_pair(CivilDate{Y, M, 1}, DatePrecision::Month);
  }
  if (s.size() == 10) {
    if (!read_int(s, 0, 4, Y) || s[4] != '-' || !read_int(s, 5, 2, M) || s[7] != '-' ||
        !read_int(s, 8, 2, D))
      return std::nullopt;
    if (!is_valid_date(Y, M, D)) return std::nullopt;
    return std::make_pair(CivilDate{Y, M, D}, DatePrecision::Day);
  }
  return std::nullopt;
}

std::string format_civil(const CivilDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::string format_partial_date(const CivilDate& d, DatePrecision p) {
  char buf[16];
  switch (p) {
    case DatePrecision::Year:
      std::snprintf(buf, sizeof buf, "%04d", d.year);
      break;
    case DatePrecision::Month:
      std::snprintf(buf, sizeof buf, "%04d-%02d", d.year, d.month);
      break;
    case DatePrecision::Day:
      return format_civil(d);
  }
  return buf;
}

Instant bin_floor(Instant t, BinWidth w) {
  std::int64_t days = t / kSecondsPerDay;
  if (t < 0 && t % kSecondsPerDay != 0) --days;
  switch (w) {
    case BinWidth::Day:
      return days * kSecondsPerDay;
    case BinWidth::Week: {
      // 1970-01-01 was a Thursday; shift so weeks start on Monday.
      std::int64_t dow = (days + 4) % 7;  // 0 = Sunday
      if (dow < 0) dow += 7;
      std::int64_t since_monday = (dow + 6) % 7;
      return (days - since_monday) * kSecondsPerDay;
    }
    case BinWidth::Month: {
      CivilDate d = civil_from_days(days);
      return days_from_civil(d.year, d.month, 1) * kSecondsPerDay;
    }
  }
  return t;
}

Instant bin_next(Instant start, BinWidth w) {
  switch (w) {
    case BinWidth::Day:
      return start + kSecondsPerDay;
    case BinWidth::Week:
      return start + 7 * kSecondsPerDay;
    case BinWidth::Month: {
      CivilDate d = civil_of(start);
      int y = d.year, m = d.month + 1;
      if (m == 13) m = 1, ++y;
      return days_from_civil(y, m, 1) * kSecondsPerDay;
    }
  }
  return start;
}

const char* bin_width_name(BinWidth w) {
  switch (w) {
    case BinWidth::Day: return "day";
    case BinWidth::Week: return "week";
    case BinWidth::Month: return "month";
  }
  return "?";
}

std::optional<BinWidth> bin_width_from_name(const std::string& name) {
  if (name == "day") return BinWidth::Day;
  if (name == "week") return BinWidth::Week;
  if (name == "month") return BinWidth::Month;
  return std::nullopt;
}

}  // namespace canet
