#pragma once

#include <stdexcept>
#include <string>

namespace fpreg {

// Values mirror fpreg_status in include/fpreg/fpreg.h.
enum class ErrorCode : int {
  CompositeModulus = 1,
  ModulusTooSmall,
  ContextMismatch,
  ExactCapExceeded,
  CapExceeded,
  BadGeneratorSpec,
  FileFormat,
  PartialColouring,
  EmptyCoefficients,
  DimensionMismatch,
  ResolutionTooSmall,
  UnsupportedExponents,
  ConstructionFailed,
  EmptyBase,
  CoverageViolated,
  NoWitness,
  NumericalHealth,
  InvalidArgument,
  Io,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fpreg
