#pragma once

#include <stdexcept>
#include <string>

namespace oran {

struct InvalidParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InfeasibleSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotConnectedError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotAssignedError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InstanceTooLargeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace oran
