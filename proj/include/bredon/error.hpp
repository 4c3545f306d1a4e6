#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bredon {

enum class ErrorKind {
    Parse,
    GroupTooLarge,
    CompositionMismatch,
    VarianceMismatch,
    FamilyNotCompatible,
    FamilyNotSemiFull,
    NotFreeSum,
    NotObjectwiseFree,
    BudgetExceeded,
    StabilizerOutsideFamily,
    BoundarySquareNonzero,
    BoundaryMismatch,
    NotChainMap,
    NotACycle,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace bredon
