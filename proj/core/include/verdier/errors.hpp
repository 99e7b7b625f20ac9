#pragma once

#include <stdexcept>
#include <string>

namespace verdier {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : Error { using Error::Error; };
struct UnknownElementError : Error { using Error::Error; };
struct NotGradedError : Error { using Error::Error; };
struct NotAFaceError : Error { using Error::Error; };
struct RingMismatchError : Error { using Error::Error; };
struct NotComparableError : Error { using Error::Error; };
struct NotIntervalClosedError : Error { using Error::Error; };
struct NoLeastElementError : Error { using Error::Error; };
struct NoGreatestElementError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct DataIntegrityError : Error { using Error::Error; };
struct ArithmeticOverflowError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

} // namespace verdier
