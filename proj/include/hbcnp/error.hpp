#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbcnp {

enum class ErrorCode {
    CenterMismatch,
    CompositionCenter,
    NonInvertible,
    DivisionOrder,
    DomainViolation,
    NearSingular,
    DomainMismatch,
    RangeViolation,
    VanishingKernel,
    NoConvergence,
    LengthMismatch,
    DimensionMismatch,
    NotSchurClass,
    NotStrictlySolvable,
    WitnessInconsistent,
    NearZeroH,
    InvalidArgument,
    Parse,
};

/// Upper-case identifier of an error code, e.g. "NON_INVERTIBLE".
std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; what() holds the detail text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hbcnp
