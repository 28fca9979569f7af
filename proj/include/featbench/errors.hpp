#pragma once

#include <stdexcept>

namespace featbench {

/// Thrown when a file cannot be opened, parsed, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a run configuration or manifest is invalid.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace featbench
