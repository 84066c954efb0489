#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aeroshield::gateway {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // I/O and unexpected failures
  kExitUsage = 2,    // bad flags, unknown scenario, invalid config file
  kExitDomain = 3,   // engine rejected the inputs
};

// Command-line entry point. `args` excludes the program name.
//
//   aeroshield [--config PATH] [--log PATH] [--json] <command> ...
//     dose     --scenario S --altitude-km A [--mode anchor|energy]
//     plan     --scenario S --limit-msv L [--altitudes A...] [--continuous]
//     profile  --scenario S [--format csv|json] [--points N] [--min-altitude-km A]
//     premium  --limit-msv L [--mode exact|mc] [--years N] [--seed K] [--exposure F] [--scenarios S...]
//     scenarios
//     config
//     serve    [--host H] --port P
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aeroshield::gateway
