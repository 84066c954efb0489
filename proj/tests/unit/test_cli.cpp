#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aeroshield/gateway/cli.hpp"
#include "aeroshield/gateway/run_log.hpp"
#include "aeroshield/gateway/service.hpp"

using namespace aeroshield::gateway;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("plan prints the recommendation") {
  const auto r = cli({"plan", "--scenario", "decadal-active", "--limit-msv", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("recommendation: descend 9.5 km, loss $4,680") != std::string::npos);

  const auto pmf = cli({"plan", "--scenario", "pmf", "--limit-msv", "1", "--continuous"});
  CHECK(pmf.code == kExitOk);
  CHECK(pmf.out.find("recommendation: cancel, loss $25,200") != std::string::npos);
  CHECK(pmf.out.find("no compliant altitude") != std::string::npos);

  const auto proceed = cli({"plan", "--scenario", "decadal-active", "--limit-msv", "20"});
  CHECK(proceed.out.find("recommendation: proceed, loss $0") != std::string::npos);

  const auto custom = cli({"plan", "--scenario", "decadal-active", "--limit-msv", "1", "--altitudes", "11", "8"});
  CHECK(custom.out.find("recommendation: descend 11 km") != std::string::npos);
}

TEST_CASE("dose prints the display value and band") {
  const auto r = cli({"dose", "--scenario", "decadal-active", "--altitude-km", "7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.120 mSv") != std::string::npos);
  CHECK(r.out.find("[below-public]") != std::string::npos);

  const auto energy = cli({"dose", "--scenario", "pmf", "--altitude-km", "12", "--mode", "energy"});
  CHECK(energy.code == kExitOk);
  CHECK(energy.out.find("500 mSv") != std::string::npos);
  CHECK(energy.out.find("approximate") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({"plan", "--scenario", "no-such", "--limit-msv", "1"}).code == kExitUsage);
  CHECK(cli({"plan", "--scenario", "decadal-active"}).code == kExitUsage);
  CHECK(cli({"plan", "--scenario", "decadal-active", "--limit-msv", "1", "--bogus"}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"dose", "--scenario", "decadal-active", "--altitude-km", "14"}).code == kExitDomain);
  CHECK(cli({"dose", "--scenario", "carrington", "--altitude-km", "7"}).code == kExitDomain);
  CHECK(cli({"plan", "--scenario", "decadal-active", "--limit-msv", "-1"}).code == kExitUsage);
  CHECK(cli({"premium", "--limit-msv", "1", "--mode", "mc", "--years", "10"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  const auto bad = temp_file("aeroshield_cli_bad.json");
  std::ofstream(bad) << R"({"atmosphere": {"anchors": [[9.5, 365], [12, 234]]}})";
  const auto r = cli({"--config", bad.string(), "scenarios"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("atmosphere.anchors") != std::string::npos);
}

TEST_CASE("config overrides flow through to outputs") {
  const auto path = temp_file("aeroshield_cli_fare.json");
  std::ofstream(path) << R"({"cost": {"fare_usd": 200}})";
  const auto r = cli({"--config", path.string(), "plan", "--scenario", "pmf", "--limit-msv", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("cancel, loss $28,800") != std::string::npos);

  const auto empty = temp_file("aeroshield_cli_empty.json");
  std::ofstream(empty) << "{}";
  const auto a = cli({"--config", empty.string(), "config"});
  const auto b = cli({"config"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("json output is stable under parse and re-serialize") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "plan", "--scenario", "decadal-active", "--limit-msv", "1", "--continuous"},
           {"--json", "dose", "--scenario", "decadal-active", "--altitude-km", "8.25"},
           {"--json", "premium", "--limit-msv", "1", "--mode", "mc", "--years", "1000", "--seed", "4"},
           {"--json", "scenarios"},
           {"profile", "--scenario", "decadal-active", "--format", "json", "--points", "7"},
           {"config"}}) {
    const auto r = cli(args);
    REQUIRE(r.code == kExitOk);
    const json doc = json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(json::parse(doc.dump()) == doc);
  }
}

TEST_CASE("cli json equals the service documents") {
  Service service{EngineConfig{}};
  const auto plan = cli({"--json", "plan", "--scenario", "decadal-active", "--limit-msv", "1"});
  CHECK(json::parse(plan.out) == service.plan({"decadal-active", 1.0, std::nullopt, false}));
  const auto premium = cli({"--json", "premium", "--limit-msv", "20", "--mode", "mc", "--seed", "11"});
  PremiumRequest req;
  req.limit_msv = 20.0;
  req.mode = PremiumMode::monte_carlo;
  req.seed = 11;
  CHECK(json::parse(premium.out) == service.premium(req));
}

TEST_CASE("profile csv") {
  const auto r = cli({"profile", "--scenario", "decadal-active", "--points", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "depth_gcm2,altitude_km,dose_sv\n234,12,0.0012\n365,9.5,0.00045\n484,7,0.00012\n");
}

TEST_CASE("plan writes to the run log given by --log") {
  const auto path = temp_file("aeroshield_cli_runs.jsonl");
  CHECK(cli({"--log", path.string(), "plan", "--scenario", "decadal-active", "--limit-msv", "1"}).code == kExitOk);
  CHECK(cli({"--log", path.string(), "dose", "--scenario", "decadal-active", "--altitude-km", "7"}).code == kExitOk);
  CHECK(cli({"--log", path.string(), "plan", "--scenario", "pmf", "--limit-msv", "1"}).code == kExitOk);
  const auto records = read_run_log(path);
  REQUIRE(records.size() == 2);
  CHECK(records[0].loss_cents == 468000);
  CHECK(records[1].plan_kind == "cancel");

  CHECK(cli({"--log", "/nonexistent-dir/x/runs.jsonl", "plan", "--scenario", "pmf", "--limit-msv", "1"}).code ==
        kExitFailure);
}
