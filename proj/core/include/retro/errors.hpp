#pragma once

#include <stdexcept>
#include <string>

namespace retro {

/// Malformed or inconsistent input data (bad records, duplicate ids,
/// truncated snapshots, unresolvable references).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration (schema violations, unknown keys, bad values).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace retro
