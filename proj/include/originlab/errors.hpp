#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace originlab {

enum class ErrorKind {
    ContractViolation,
    SymmetryViolation,
    WeightError,
    InvalidParameter,
    ZeroCostVector,
    ConfigError,
    TooLargeToEnumerate,
    FiniteAtomsRequired,
    MeanZeroRequired,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every recoverable failure; `kind()` carries the
/// category so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) fail(kind, what);
}

}  // namespace originlab
