#pragma once

#include <stdexcept>
#include <string>

namespace loopforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (caller bug or bad data).
struct PreconditionError : Error {
    using Error::Error;
};

/// Geometry is in a degenerate configuration the algorithms do not accept;
/// the caller should perturb / resample and retry.
struct NonGenericError : Error {
    using Error::Error;
};

/// A property the theory guarantees failed to verify; indicates a bug.
struct InternalConsistencyError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace loopforge
