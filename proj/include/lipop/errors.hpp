#pragma once

#include <stdexcept>
#include <string>

namespace lipop {

// Base of everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad construction input: malformed specs, degenerate parameters,
// rejected self-maps, unsupported norm pairs.  CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Failure while evaluating: point outside the closed disk, NaN from an
// evaluator.  CLI exit code 3.
struct EvalError : Error {
    using Error::Error;
};

struct NotSelfMapError : InputError {
    using InputError::InputError;
};

struct UnsupportedNormPairError : InputError {
    using InputError::InputError;
};

} // namespace lipop
