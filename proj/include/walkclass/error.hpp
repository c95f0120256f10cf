#pragma once

#include <stdexcept>
#include <string>

namespace walkclass {

enum class ErrorCode {
  MalformedRational,
  MalformedModel,
  NegativeWeight,
  AllZeroWeights,
  InvalidArgument,
  PreconditionFailed,
  DegenerateFiber,
  NonRealRegion,
  RootsNotSeparated,
  PoleAtLattice,
  OutOfBranch,
  IndeterminateAtProbe,
  AllSamplesNearPoles,
  NoSampleInDomain,
  NonConvergence,
  RootSearchLimit,
  IdentityViolated,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace walkclass
