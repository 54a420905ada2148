#pragma once

#include <stdexcept>

namespace halobeam {

/// Malformed or inconsistent scenario configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failure to read or write an output artifact (CLI exit code 2).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace halobeam
