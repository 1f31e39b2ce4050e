#ifndef ABSPEC_ERROR_HPP
#define ABSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace abspec {

/// Precondition violation on a physical or numerical input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative solver exceeded its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run configuration is malformed; carries the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}

  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abspec

#endif  // ABSPEC_ERROR_HPP
