#include "walkclass/error.hpp"

namespace walkclass {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::MalformedModel: return "MalformedModel";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::AllZeroWeights: return "AllZeroWeights";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::DegenerateFiber: return "DegenerateFiber";
    case ErrorCode::NonRealRegion: return "NonRealRegion";
    case ErrorCode::RootsNotSeparated: return "RootsNotSeparated";
    case ErrorCode::PoleAtLattice: return "PoleAtLattice";
    case ErrorCode::OutOfBranch: return "OutOfBranch";
    case ErrorCode::IndeterminateAtProbe: return "IndeterminateAtProbe";
    case ErrorCode::AllSamplesNearPoles: return "AllSamplesNearPoles";
    case ErrorCode::NoSampleInDomain: return "NoSampleInDomain";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RootSearchLimit: return "RootSearchLimit";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace walkclass
