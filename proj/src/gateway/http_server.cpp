#include "aeroshield/gateway/http_server.hpp"

#include <httplib.h>

#include <functional>

#include "aeroshield/errors.hpp"
#include "aeroshield/gateway/service.hpp"

namespace aeroshield::gateway {

using nlohmann::json;

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message, const std::string& field = {}) {
  json body = {{"error", message}};
  if (!field.empty()) body["field"] = field;
  send_json(res, status, body);
}

// Runs `handler` and maps engine exceptions onto HTTP status codes.
void guarded(httplib::Response& res, const std::function<json()>& handler) {
  try {
    send_json(res, 200, handler());
  } catch (const RequestError& e) {
    send_error(res, 400, e.what(), e.field());
  } catch (const NotFoundError& e) {
    send_error(res, 404, e.what());
  } catch (const DomainError& e) {
    send_error(res, 422, e.what());
  } catch (const ConfigError& e) {
    send_error(res, 422, e.what(), e.field());
  } catch (const RunLogError& e) {
    send_error(res, 500, e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, e.what());
  }
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error&) {
    throw RequestError("body", "is not valid JSON");
  }
}

std::size_t parse_count(const std::string& text, const char* field) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    throw RequestError(field, "must be a positive integer");
  }
  if (pos != text.size()) throw RequestError(field, "must be a positive integer");
  return value;
}

double parse_number(const std::string& text, const char* field) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw RequestError(field, "must be a number");
  }
  if (pos != text.size()) throw RequestError(field, "must be a number");
  return value;
}

}  // namespace

void register_routes(httplib::Server& server, Service& service) {
  server.Get("/api/v1/scenarios", [&service](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { return service.scenarios(); });
  });

  server.Get("/api/v1/dose-profile", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (!req.has_param("scenario")) throw RequestError("scenario", "is required");
      ProfileRequest request;
      request.scenario = req.get_param_value("scenario");
      if (req.has_param("points")) request.points = parse_count(req.get_param_value("points"), "points");
      if (req.has_param("min_altitude_km")) {
        request.min_altitude_km = parse_number(req.get_param_value("min_altitude_km"), "min_altitude_km");
      }
      return service.dose_profile(request);
    });
  });

  server.Post("/api/v1/plan", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.plan(parse_plan_request(parse_body(req))); });
  });

  server.Post("/api/v1/premium", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.premium(parse_premium_request(parse_body(req))); });
  });

  server.Post("/api/v1/what-if", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return service.what_if(parse_what_if_request(parse_body(req))); });
  });
}

bool serve_http(Service& service, const std::string& host, int port) {
  httplib::Server server;
  register_routes(server, service);
  return server.listen(host, port);
}

}  // namespace aeroshield::gateway
