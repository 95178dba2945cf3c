#pragma once

#include <stdexcept>
#include <string>

namespace graphic {

// Error taxonomy mirrored by the CLI exit codes: config/parse/shape/domain
// problems exit 2, capacity problems exit 3.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated call contract (e.g. operand list shorter than the active set).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace graphic
