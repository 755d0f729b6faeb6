#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canet/timeutil.hpp"

namespace canet {

struct PaperRecord {
  std::string paper_id;
  std::string title;
  CivilDate publication_date;
  // Precision the input actually carried; partial dates complete to the
  // first day of the period and response-time outputs caveat accordingly.
  DatePrecision date_precision = DatePrecision::Day;
  std::optional<std::string> doi;
};

struct TweetEvent {
  std::string event_id;
  std::string user_id;
  Instant timestamp = 0;
  std::string text;
  std::vector<std::string> mentioned_user_ids;
  std::optional<std::string> retweet_of_user_id;
  std::optional<bool> is_retweet;
};

struct UserProfile {
  std::string user_id;
  std::string handle;
  std::optional<std::string> bio;
  std::int64_t followers_count = 0;
  std::optional<std::string> language_hint;
};

struct AttentionDataset {
  PaperRecord paper;
  std::vector<TweetEvent> events;          // sorted by (timestamp, event_id) once canonical
  std::map<std::string, UserProfile> profiles;
  bool canonical = false;
};

struct Diagnostic {
  std::string code;     // stable identifier, e.g. "DuplicateEventId"
  std::string subject;  // offending record (event_id / user_id / row number)
  std::string detail;
};

// Library errors carry a stable code so the CLI can map them to exit status
// without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class SchemaViolation : public Error {
 public:
  SchemaViolation(std::size_t row, std::string field, const std::string& reason)
      : Error("SchemaViolation",
              "row " + std::to_string(row) + ", field '" + field + "': " + reason),
        row_(row),
        field_(std::move(field)) {}
  std::size_t row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t row_;
  std::string field_;
};

}  // namespace canet
