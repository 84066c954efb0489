#pragma once

#include <stdexcept>
#include <string>

namespace aeroshield {

// Input outside the validated range of a model (altitude above the table
// ceiling, negative energy, probability outside (0, 1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configuration or scenario is structurally invalid or lacks data that an
// operation requires. `field` names the offending configuration path when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message, std::string field = {})
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Lookup of an id (scenario, profile) that does not exist.
class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace aeroshield
