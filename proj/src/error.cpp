#include "error.hpp"

namespace fpreg {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ExactCapExceeded: return "ExactCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadGeneratorSpec: return "BadGeneratorSpec";
    case ErrorCode::FileFormat: return "FileFormat";
    case ErrorCode::PartialColouring: return "PartialColouring";
    case ErrorCode::EmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ResolutionTooSmall: return "ResolutionTooSmall";
    case ErrorCode::UnsupportedExponents: return "UnsupportedExponents";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::EmptyBase: return "EmptyBase";
    case ErrorCode::CoverageViolated: return "CoverageViolated";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NumericalHealth: return "NumericalHealth";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace fpreg
