#pragma once

#include <stdexcept>
#include <string>

namespace bridgestate {

/// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold for every valid input did not.
/// Always indicates a bug; `property()` names the violated statement.
class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(std::string property, const std::string& detail)
      : std::logic_error(property + ": " + detail), property_(std::move(property)) {}

  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

}  // namespace bridgestate
