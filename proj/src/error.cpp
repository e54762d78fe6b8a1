#include "hbcnp/error.hpp"

namespace hbcnp {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::CenterMismatch: return "CENTER_MISMATCH";
        case ErrorCode::CompositionCenter: return "COMPOSITION_CENTER";
        case ErrorCode::NonInvertible: return "NON_INVERTIBLE";
        case ErrorCode::DivisionOrder: return "DIVISION_ORDER";
        case ErrorCode::DomainViolation: return "DOMAIN_VIOLATION";
        case ErrorCode::NearSingular: return "NEAR_SINGULAR";
        case ErrorCode::DomainMismatch: return "DOMAIN_MISMATCH";
        case ErrorCode::RangeViolation: return "RANGE_VIOLATION";
        case ErrorCode::VanishingKernel: return "VANISHING_KERNEL";
        case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
        case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::NotSchurClass: return "NOT_SCHUR_CLASS";
        case ErrorCode::NotStrictlySolvable: return "NOT_STRICTLY_SOLVABLE";
        case ErrorCode::WitnessInconsistent: return "WITNESS_INCONSISTENT";
        case ErrorCode::NearZeroH: return "NEAR_ZERO_H";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::Parse: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace hbcnp
