#include "aeroshield/gateway/run_log.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>

namespace aeroshield::gateway {

using nlohmann::json;

json to_json(const RunRecord& r) {
  return {{"timestamp", r.timestamp},
          {"scenario", r.scenario_id},
          {"policy_limit_sv", r.policy_limit_sv},
          {"plan", {{"kind", r.plan_kind},
                    {"altitude_km", r.plan_altitude_km ? json(*r.plan_altitude_km) : json(nullptr)},
                    {"label", r.plan_label}}},
          {"dose_sv", r.dose_sv},
          {"loss_cents", r.loss_cents},
          {"config_hash", r.config_hash}};
}

RunRecord run_record_from_json(const json& j) {
  RunRecord r;
  r.timestamp = j.at("timestamp").get<std::string>();
  r.scenario_id = j.at("scenario").get<std::string>();
  r.policy_limit_sv = j.at("policy_limit_sv").get<double>();
  const json& plan = j.at("plan");
  r.plan_kind = plan.at("kind").get<std::string>();
  if (!plan.at("altitude_km").is_null()) r.plan_altitude_km = plan.at("altitude_km").get<double>();
  r.plan_label = plan.at("label").get<std::string>();
  r.dose_sv = j.at("dose_sv").get<double>();
  r.loss_cents = j.at("loss_cents").get<std::int64_t>();
  r.config_hash = j.at("config_hash").get<std::string>();
  return r;
}

std::string utc_timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
  const auto millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buf[40];
  const auto n = std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  std::snprintf(buf + n, sizeof buf - n, ".%03dZ", static_cast<int>(millis));
  return buf;
}

RunLog::RunLog(std::filesystem::path path) : path_(std::move(path)) {
  out_.open(path_, std::ios::out | std::ios::app);
  if (!out_) throw RunLogError("cannot open run log '" + path_.string() + "' for writing");
}

void RunLog::append(const RunRecord& record) {
  const std::string line = to_json(record).dump() + "\n";
  std::lock_guard lock(mutex_);
  out_ << line;
  out_.flush();
  if (!out_) throw RunLogError("write to run log '" + path_.string() + "' failed");
}

std::vector<RunRecord> read_run_log(const std::filesystem::path& path) {
  std::vector<RunRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(run_record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw RunLogError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::optional<std::filesystem::path> resolve_log_path(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv("AEROSHIELD_LOG"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

}  // namespace aeroshield::gateway
