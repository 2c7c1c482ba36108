#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

enum class ErrorKind {
    AsymmetricAdjacency,
    OuterWalkNotAFace,
    EulerViolation,
    NotACycle,
    PathDoesNotSplit,
    BoundaryNotCycle,
    InvalidPrecoloring,
    SizeBound,
    RecipeInapplicable,
    RecipeStuck,
    AmbiguousRule,
    ParseError,
    BadArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dlab
