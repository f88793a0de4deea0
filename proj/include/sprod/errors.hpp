#pragma once

#include <stdexcept>
#include <string>

namespace sprod {

enum class ErrorKind {
    PoleAtPoint,
    DivergentLimit,
    NotSquare,
    SizeMismatch,
    SizeError,
    DuplicateRapidity,
    MalformedSpec,
    NoConvergence,
    UnknownKind,
    SchemaError,
    UnknownSuite,
};

const char* error_name(ErrorKind k);

// Every domain failure surfaces as this type; kind() selects the contract name.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sprod
