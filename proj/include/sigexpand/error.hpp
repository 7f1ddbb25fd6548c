#pragma once

#include <stdexcept>
#include <string>

namespace sigx {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad letters, malformed alphabet parameters, schema violations.
struct ConfigError : Error {
    using Error::Error;
};

// A jump-power product left the representable range {-e*m,...,-1}.
// Recoverable: rebuild the alphabet with a larger m and retry.
struct DepthError : Error {
    using Error::Error;
};

// Structural precondition on a process spec failed (e.g. a coefficient
// that a given expansion requires to vanish is populated).
struct ValidationError : Error {
    using Error::Error;
};

// Numeric evaluation hit a symbol with no assigned value.
struct EvalError : Error {
    using Error::Error;
};

// Requested moment order is not covered by the declared integrability.
struct IntegrabilityError : Error {
    using Error::Error;
};

// Work or memory estimate exceeded the configured budget.
struct ResourceError : Error {
    using Error::Error;
};

}  // namespace sigx
