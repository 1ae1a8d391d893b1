#include "lyap/errors.hpp"

namespace lyap {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::EmptySignature: return "EmptySignature";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::NegativeGenus: return "NegativeGenus";
    case ErrorKind::NotHyperelliptic: return "NotHyperelliptic";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::InconsistentCover: return "InconsistentCover";
    case ErrorKind::NonMonotoneH: return "NonMonotoneH";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BelowLowerBound: return "BelowLowerBound";
    case ErrorKind::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::OddN: return "OddN";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "UnknownError";
}

} // namespace lyap
