#pragma once

#include <stdexcept>
#include <string>

namespace lyap {

enum class ErrorKind {
    EmptySignature,
    NonIntegralGenus,
    InvalidOrder,
    NegativeGenus,
    NotHyperelliptic,
    GenusTooSmall,
    InconsistentCover,
    NonMonotoneH,
    ModeMismatch,
    IndexOutOfRange,
    BelowLowerBound,
    UnsupportedGenus,
    ConstraintViolation,
    OddN,
    LengthMismatch,
    CrossCheckFailure,
    UsageError,
};

const char* error_kind_name(ErrorKind k);

// Single exception type for all domain errors; `kind` is the machine-readable
// discriminator, the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace lyap
