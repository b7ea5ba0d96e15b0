#include "hilfer/error.hpp"

namespace hilfer {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonMonotoneKernel: return "NonMonotoneKernel";
        case ErrorCode::InvalidKernel: return "InvalidKernel";
        case ErrorCode::InvalidGrading: return "InvalidGrading";
        case ErrorCode::UnknownKernel: return "UnknownKernel";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ConvergenceError: return "ConvergenceError";
        case ErrorCode::MeshMismatch: return "MeshMismatch";
        case ErrorCode::WeightTooSingular: return "WeightTooSingular";
        case ErrorCode::InnerDivergence: return "InnerDivergence";
        case ErrorCode::DegenerateStep: return "DegenerateStep";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::SeriesCap: return "SeriesCap";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace hilfer
