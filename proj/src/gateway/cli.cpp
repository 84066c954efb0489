#include "aeroshield/gateway/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>

#include "aeroshield/errors.hpp"
#include "aeroshield/gateway/http_server.hpp"
#include "aeroshield/gateway/service.hpp"

namespace aeroshield::gateway {

using nlohmann::json;

namespace {

std::string fmt_number(double value, const char* spec = "%g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

void print_evaluation_row(std::ostream& out, const json& e, bool recommended) {
  char line[160];
  std::snprintf(line, sizeof line, "%s %-20s %-12s %-22s %-13s %s", recommended ? "*" : " ",
                e["plan"]["label"].get<std::string>().c_str(), e["dose_display"].get<std::string>().c_str(),
                e["band"].get<std::string>().c_str(), e["compliant"].get<bool>() ? "compliant" : "non-compliant",
                e["loss_usd"].get<std::string>().c_str());
  out << line << '\n';
}

void render_plan(std::ostream& out, const json& doc) {
  out << "scenario " << doc["scenario"].get<std::string>() << ", limit "
      << format_msv(doc["policy_limit_sv"].get<double>()) << '\n';
  const json& best = doc["recommendation"];
  for (const auto& e : doc["evaluations"]) print_evaluation_row(out, e, e["plan"] == best["plan"]);
  out << "recommendation: " << best["plan"]["label"].get<std::string>() << ", loss "
      << best["loss_usd"].get<std::string>() << '\n';
  if (doc.contains("continuous")) {
    const json& c = doc["continuous"];
    if (c["compliant_altitude_found"].get<bool>()) {
      out << "continuous optimum: " << fmt_number(c["altitude_km"].get<double>(), "%.3f") << " km ("
          << fmt_number(c["depth_gcm2"].get<double>(), "%.2f") << " g/cm2), dose "
          << c["dose_display"].get<std::string>() << ", loss " << c["loss_usd"].get<std::string>() << '\n';
    } else {
      out << "continuous optimum: no compliant altitude, fall back to cancel (" << c["loss_usd"].get<std::string>()
          << ")\n";
    }
  }
}

void render_profile_csv(std::ostream& out, const json& doc) {
  out << "depth_gcm2,altitude_km,dose_sv\n";
  for (const auto& row : doc["rows"]) {
    out << fmt_number(row["depth_gcm2"].get<double>(), "%.10g") << ','
        << fmt_number(row["altitude_km"].get<double>(), "%.10g") << ','
        << fmt_number(row["dose_sv"].get<double>(), "%.10g") << '\n';
  }
}

void render_premium(std::ostream& out, const json& doc) {
  for (const auto& item : doc["items"]) {
    out << "  " << item["label"].get<std::string>() << ": " << fmt_number(item["annual_frequency"].get<double>())
        << "/yr x " << item["severity_usd"].get<std::string>() << '\n';
  }
  out << "premium (" << doc["mode"].get<std::string>() << "): " << doc["premium_usd"].get<std::string>() << "/yr";
  if (doc.contains("standard_error_cents")) {
    out << " +/- " << Cents{std::llround(doc["standard_error_cents"].get<double>())}.usd_string() << " (s.e., "
        << doc["years"].get<std::size_t>() << " years, seed " << doc["seed"].get<std::uint64_t>()
        << "); exact " << doc["exact_premium_usd"].get<std::string>();
  }
  out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solar proton event risk-cost engine for flight operations", "aeroshield"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string log_flag;
  bool as_json = false;
  app.add_option("--config", config_path, "JSON configuration overrides");
  app.add_option("--log", log_flag, "Run log path (default: $AEROSHIELD_LOG)");
  app.add_flag("--json", as_json, "Machine-readable output");

  DoseRequest dose_req;
  std::string dose_mode;
  auto* dose_cmd = app.add_subcommand("dose", "Event dose at one altitude");
  dose_cmd->add_option("--scenario", dose_req.scenario)->required();
  dose_cmd->add_option("--altitude-km", dose_req.altitude_km)->required();
  dose_cmd->add_option("--mode", dose_mode)->check(CLI::IsMember({"anchor", "energy"}));

  PlanRequest plan_req;
  std::vector<double> plan_altitudes;
  auto* plan_cmd = app.add_subcommand("plan", "Evaluate mitigation plans and recommend one");
  plan_cmd->add_option("--scenario", plan_req.scenario)->required();
  plan_cmd->add_option("--limit-msv", plan_req.limit_msv)->required();
  plan_cmd->add_option("--altitudes", plan_altitudes, "Candidate descent altitudes (km)");
  plan_cmd->add_flag("--continuous", plan_req.continuous, "Also solve the highest compliant altitude");

  ProfileRequest profile_req;
  std::string profile_format = "csv";
  double profile_min_altitude = -1.0;
  auto* profile_cmd = app.add_subcommand("profile", "Dose-depth curve rows for plotting");
  profile_cmd->add_option("--scenario", profile_req.scenario)->required();
  profile_cmd->add_option("--format", profile_format)->check(CLI::IsMember({"csv", "json"}));
  profile_cmd->add_option("--points", profile_req.points);
  profile_cmd->add_option("--min-altitude-km", profile_min_altitude);

  PremiumRequest premium_req;
  std::string premium_mode = "exact";
  std::vector<std::string> premium_scenarios;
  auto* premium_cmd = app.add_subcommand("premium", "Insurance premium from frequency x severity");
  premium_cmd->add_option("--limit-msv", premium_req.limit_msv)->required();
  premium_cmd->add_option("--mode", premium_mode)->check(CLI::IsMember({"exact", "mc"}));
  premium_cmd->add_option("--years", premium_req.years);
  premium_cmd->add_option("--seed", premium_req.seed);
  premium_cmd->add_option("--exposure", premium_req.exposure_fraction);
  premium_cmd->add_option("--scenarios", premium_scenarios);

  auto* scenarios_cmd = app.add_subcommand("scenarios", "List the flare scenario catalog");
  auto* config_cmd = app.add_subcommand("config", "Print the effective configuration");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON API");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port)->required()->check(CLI::Range(1, 65535));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<EngineConfig> config;
  try {
    config = config_path.empty() ? EngineConfig{} : load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::unique_ptr<RunLog> run_log;
  try {
    auto log_path = resolve_log_path(log_flag);
    if (!log_path && serve_cmd->parsed()) log_path = "aeroshield-runs.jsonl";
    if (log_path && (plan_cmd->parsed() || serve_cmd->parsed())) run_log = std::make_unique<RunLog>(*log_path);
  } catch (const RunLogError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  Service service(std::move(*config), run_log.get());
  const auto emit = [&](const json& doc) { out << doc.dump(2) << '\n'; };

  try {
    if (dose_cmd->parsed()) {
      if (!dose_mode.empty()) dose_req.mode = dose_mode == "anchor" ? DoseMode::anchor : DoseMode::energy;
      const json doc = service.dose(dose_req);
      if (as_json) {
        emit(doc);
      } else {
        out << doc["scenario"].get<std::string>() << " at " << fmt_number(dose_req.altitude_km) << " km ("
            << fmt_number(doc["depth_gcm2"].get<double>(), "%.1f") << " g/cm2): "
            << doc["dose_display"].get<std::string>() << " [" << doc["band"].get<std::string>() << "]"
            << (doc["mode"] == "energy" ? " (energy scaling, approximate)" : "")
            << (doc["extrapolated"].get<bool>() ? " (extrapolated)" : "") << '\n';
      }
    } else if (plan_cmd->parsed()) {
      if (!plan_altitudes.empty()) plan_req.altitudes_km = plan_altitudes;
      const json doc = service.plan(plan_req);
      as_json ? emit(doc) : render_plan(out, doc);
    } else if (profile_cmd->parsed()) {
      if (profile_min_altitude >= 0.0) profile_req.min_altitude_km = profile_min_altitude;
      const json doc = service.dose_profile(profile_req);
      (as_json || profile_format == "json") ? emit(doc) : render_profile_csv(out, doc);
    } else if (premium_cmd->parsed()) {
      premium_req.mode = premium_mode == "mc" ? PremiumMode::monte_carlo : PremiumMode::exact;
      if (!premium_scenarios.empty()) premium_req.scenarios = premium_scenarios;
      const json doc = service.premium(premium_req);
      as_json ? emit(doc) : render_premium(out, doc);
    } else if (scenarios_cmd->parsed()) {
      const json doc = service.scenarios();
      if (as_json) {
        emit(doc);
      } else {
        for (const auto& s : doc["scenarios"]) {
          out << s["id"].get<std::string>() << "  every " << fmt_number(s["recurrence_years"].get<double>(), "%.4g")
              << " yr  " << s["label"].get<std::string>()
              << (s["dose_computable"].get<bool>() ? "" : "  (no dose data)") << '\n';
        }
      }
    } else if (config_cmd->parsed()) {
      emit(to_json(service.config()));
    } else if (serve_cmd->parsed()) {
      out << "listening on http://" << host << ':' << port << "/api/v1 (run log "
          << run_log->path().string() << ")" << std::endl;
      if (!serve_http(service, host, port)) {
        err << "error: cannot bind " << host << ':' << port << '\n';
        return kExitFailure;
      }
    }
  } catch (const RequestError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace aeroshield::gateway
