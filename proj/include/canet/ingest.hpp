#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canet/types.hpp"

namespace canet {

enum class DataFormat { Jsonl, Csv };

const char* data_format_name(DataFormat f);
std::optional<DataFormat> data_format_from_name(const std::string& name);

// Tweets cannot predate the platform; validation flags anything earlier.
// 2006-03-21T00:00:00Z, the first tweet's date.
constexpr Instant kDefaultMinTimestamp = 1'142'899'200;

struct ParseOptions {
  DataFormat format = DataFormat::Jsonl;
  // strict: throw on the first malformed row; otherwise collect a diagnostic
  // per rejected row and keep going.
  bool strict = true;
  Instant min_timestamp = kDefaultMinTimestamp;
};

struct ParseReport {
  AttentionDataset dataset;
  std::vector<Diagnostic> rejected;  // row-numbered, lenient mode only
};

ParseReport parse_dataset(const std::string& events_path,
                          const std::optional<std::string>& profiles_path,
                          const std::string& paper_path, const ParseOptions& opts = {});

// In-memory variants backing the file API (and the round-trip tests).
std::vector<TweetEvent> parse_events(std::string_view data, DataFormat f, bool strict,
                                     std::vector<Diagnostic>* rejected = nullptr);
std::vector<UserProfile> parse_profiles(std::string_view data, DataFormat f, bool strict,
                                        std::vector<Diagnostic>* rejected = nullptr);
PaperRecord parse_paper(std::string_view data);

std::vector<Diagnostic> validate_dataset(const AttentionDataset& ds,
                                         Instant min_timestamp = kDefaultMinTimestamp);

// Sorts events by (timestamp, event_id), dedupes mention lists preserving
// first occurrence, and drops self-mentions. Idempotent.
AttentionDataset canonicalize_dataset(AttentionDataset ds);

std::string write_events(const std::vector<TweetEvent>& events, DataFormat f);
std::string write_profiles(const std::map<std::string, UserProfile>& profiles, DataFormat f);
std::string write_paper(const PaperRecord& p);

std::string read_file(const std::string& path);  // throws FileUnreadable

}  // namespace canet
