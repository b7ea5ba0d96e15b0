#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilfer {

enum class ErrorCode {
    InvalidArgument,
    NonMonotoneKernel,
    InvalidKernel,
    InvalidGrading,
    UnknownKernel,
    DomainError,
    ConvergenceError,
    MeshMismatch,
    WeightTooSingular,
    InnerDivergence,
    DegenerateStep,
    NonConvergence,
    SeriesCap,
    ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace hilfer
