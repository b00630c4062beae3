#pragma once

#include <stdexcept>
#include <string>

namespace omtlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsing of expressions or complex literals failed.
struct ParseError : Error {
    using Error::Error;
};

// A non-finite value appeared while evaluating an expression tree.
struct EvaluationOverflowError : Error {
    using Error::Error;
};

// A documented precondition was violated by the caller.
struct ContractError : Error {
    using Error::Error;
};

// Incompatible geometry (e.g. arc radius not inside the stopping circle).
struct GeometryError : Error {
    using Error::Error;
};

// Query outside the clock's domain [0, sigma_end].
struct ClockRangeError : Error {
    using Error::Error;
};

// sigma_end == 0: |f'| vanished along the whole sampled path.
struct DegenerateClockError : Error {
    using Error::Error;
};

// The margin m collapsed below the configured tolerance.
struct DegenerateMarginError : Error {
    using Error::Error;
};

// Radius halving exhausted its budget without finding a margin.
struct RadiusSelectionError : Error {
    using Error::Error;
};

}  // namespace omtlab
