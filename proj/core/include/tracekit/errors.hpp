#pragma once

#include <stdexcept>
#include <string>

namespace tracekit {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : Error { using Error::Error; };
struct InvalidModulus : Error { using Error::Error; };
struct BadGenerator : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct IntervalTooLong : Error { using Error::Error; };
struct LengthOutOfRange : Error { using Error::Error; };
struct NotRealValued : Error { using Error::Error; };
struct WeilViolation : Error { using Error::Error; };
struct MonotonicityViolation : Error { using Error::Error; };
struct NotSquarefree : Error { using Error::Error; };
struct BadLeadingCoefficient : Error { using Error::Error; };
struct InvalidTestFrequency : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct IdentityViolation : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct CacheCorrupt : Error { using Error::Error; };
struct ComputeError : Error { using Error::Error; };

}  // namespace tracekit
