#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heckeaf {

/// Every failure the library reports carries one of these codes; the CLI maps
/// them onto exit statuses.
enum class ErrorCode {
    // exactnum
    NotMonic,
    ReduciblePolynomial,
    NotSquarefree,
    DivisionByZero,
    NotFullRank,
    NotEndomorphism,
    UnitNotFound,
    NonnegativeFormNotFound,
    // mcf
    NotFactorizable,
    ReducibleCharPoly,
    RoundTripMismatch,
    // afalg
    ShapeMismatch,
    // hecke
    SchemaError,
    NotNormalized,
    HeckeRelationViolated,
    InsufficientCoefficients,
    NotGenerated,
    NotTotallyReal,
    ModuleNotStable,
    // shared
    FieldMismatch,
    PreconditionViolated,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace heckeaf
