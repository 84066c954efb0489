#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aeroshield/gateway/config.hpp"
#include "aeroshield/gateway/run_log.hpp"

namespace aeroshield::gateway {

// A malformed request (wrong type, missing field). Maps to HTTP 400 / exit 2.
class RequestError : public std::invalid_argument {
 public:
  RequestError(const std::string& field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(field) {}
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct DoseRequest {
  std::string scenario;
  double altitude_km = 12.0;
  std::optional<DoseMode> mode;  // scenario's preferred mode when empty
};

struct ProfileRequest {
  std::string scenario;
  std::size_t points = 51;
  std::optional<double> min_altitude_km;  // defaults to the minimum cruise altitude
};

struct PlanRequest {
  std::string scenario;
  double limit_msv = 1.0;
  std::optional<std::vector<double>> altitudes_km;
  bool continuous = false;
};

struct WhatIfRequest {
  std::string scenario;
  double limit_msv = 1.0;
  double altitude_km = 12.0;
};

enum class PremiumMode { exact, monte_carlo };

struct PremiumRequest {
  double limit_msv = 1.0;
  PremiumMode mode = PremiumMode::exact;
  std::size_t years = 10000;
  std::uint64_t seed = 0;
  double exposure_fraction = 1.0;
  std::optional<std::vector<std::string>> scenarios;  // every dose-computable scenario when empty
};

// Field-level parsing of HTTP bodies / query values. Throw RequestError.
[[nodiscard]] PlanRequest parse_plan_request(const nlohmann::json& body);
[[nodiscard]] WhatIfRequest parse_what_if_request(const nlohmann::json& body);
[[nodiscard]] PremiumRequest parse_premium_request(const nlohmann::json& body);

// The single engine path behind both the CLI and the HTTP API. Responses are
// JSON documents; the CLI renders its text output from the same documents.
// Thread-safe: the configuration is immutable and run-log appends serialize.
class Service {
 public:
  explicit Service(EngineConfig config, RunLog* run_log = nullptr);
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  [[nodiscard]] const EngineConfig& config() const noexcept { return config_; }
  [[nodiscard]] const std::string& config_hash() const noexcept { return config_hash_; }

  [[nodiscard]] nlohmann::json scenarios() const;
  [[nodiscard]] nlohmann::json dose(const DoseRequest& request) const;
  [[nodiscard]] nlohmann::json dose_profile(const ProfileRequest& request) const;
  // Appends one RunRecord per call when a run log is attached.
  [[nodiscard]] nlohmann::json plan(const PlanRequest& request);
  [[nodiscard]] nlohmann::json what_if(const WhatIfRequest& request) const;
  [[nodiscard]] nlohmann::json premium(const PremiumRequest& request) const;

 private:
  EngineConfig config_;
  DecisionContext context_;
  std::string config_hash_;
  RunLog* run_log_;
};

}  // namespace aeroshield::gateway
