#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace aeroshield::gateway {

// One issued recommendation.
struct RunRecord {
  std::string timestamp;  // UTC, RFC 3339
  std::string scenario_id;
  double policy_limit_sv = 0.0;
  std::string plan_kind;
  std::optional<double> plan_altitude_km;
  std::string plan_label;
  double dose_sv = 0.0;
  std::int64_t loss_cents = 0;
  std::string config_hash;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

[[nodiscard]] nlohmann::json to_json(const RunRecord& record);
[[nodiscard]] RunRecord run_record_from_json(const nlohmann::json& j);

// Current UTC time as "2026-10-16T07:58:00.123Z".
[[nodiscard]] std::string utc_timestamp_now();

class RunLogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Append-only JSON-lines log. Appends from concurrent threads are serialized;
// each record is flushed as one complete line.
class RunLog {
 public:
  // Opens (creating if needed) for append. Throws RunLogError when the path is
  // not writable.
  explicit RunLog(std::filesystem::path path);

  void append(const RunRecord& record);
  [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::mutex mutex_;
  std::ofstream out_;
};

// Records in file order. A missing file reads as empty. Throws RunLogError on
// a line that does not parse.
[[nodiscard]] std::vector<RunRecord> read_run_log(const std::filesystem::path& path);

// `--log` value when given, else $AEROSHIELD_LOG, else empty.
[[nodiscard]] std::optional<std::filesystem::path> resolve_log_path(const std::string& flag_value);

}  // namespace aeroshield::gateway
