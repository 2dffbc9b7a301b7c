#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcnr {

// Field element in polynomial basis, l <= 16 bits used.
using fe = std::uint16_t;

// Invalid user-supplied parameters (bad p/m/l/t, malformed flags, weight
// violations). CLI exit code 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured cap or retry budget was exceeded. CLI exit code 4.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed key/message file. CLI exit code 5.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qcnr
