#pragma once

#include <stdexcept>
#include <string>

namespace nbhd {

enum class ErrorCode {
  NotAPoset,
  NotALattice,
  NotDistributive,
  ForeignElement,
  ForeignSubset,
  CarrierMismatch,
  TooLarge,
  ImageNotMeetPreserving,
  NotANeighbourhood,
  WrongClass,
  NoPpjWitness,
  NotAMorphism,
  BackendRequired,
  BackendLacksRestrictions,
  SchemaError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::ForeignElement: return "ForeignElement";
    case ErrorCode::ForeignSubset: return "ForeignSubset";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ImageNotMeetPreserving: return "ImageNotMeetPreserving";
    case ErrorCode::NotANeighbourhood: return "NotANeighbourhood";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NoPpjWitness: return "NoPpjWitness";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::BackendRequired: return "BackendRequired";
    case ErrorCode::BackendLacksRestrictions: return "BackendLacksRestrictions";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

// Domain error. The witness, when present, names concrete offending
// elements so reports never degrade to prose-only diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace nbhd
