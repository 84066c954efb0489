#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace aeroshield::gateway {

class Service;

// Registers the /api/v1 routes on `server`:
//   GET  /api/v1/scenarios
//   GET  /api/v1/dose-profile?scenario=S&points=N[&min_altitude_km=A]
//   POST /api/v1/plan       {scenario, limit_msv, altitudes?, continuous?}
//   POST /api/v1/premium    {limit_msv, mode?, years?, seed?, exposure_fraction?, scenarios?}
//   POST /api/v1/what-if    {scenario, limit_msv, altitude_km}
// Malformed requests answer 400, unknown scenarios 404, domain errors 422.
void register_routes(httplib::Server& server, Service& service);

// Blocks until the server stops. Returns false when the port cannot be bound.
bool serve_http(Service& service, const std::string& host, int port);

}  // namespace aeroshield::gateway
