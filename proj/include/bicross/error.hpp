#pragma once

#include <stdexcept>
#include <string>

namespace bicross {

enum class ErrorKind {
    SingularMatrix,
    DimensionMismatch,
    ShapeMismatch,
    NotAGroup,
    NotBijective,
    BudgetExceeded,
    NotInvertible,
    NotCoalgebraMap,
    NotAlgebraMap,
    IndexOutOfRange,
    NormalizationViolated,
    PreconditionFailed,
    ParseError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::NotBijective: return "NotBijective";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotCoalgebraMap: return "NotCoalgebraMap";
        case ErrorKind::NotAlgebraMap: return "NotAlgebraMap";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NormalizationViolated: return "NormalizationViolated";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bicross
