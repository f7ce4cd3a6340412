#pragma once

#include <stdexcept>
#include <string>

namespace levikit {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  DuplicateName,
  NotAHomomorphism,
  ImageNotClosed,
  DanglingEdge,
  WrongComponent,
  NotATransversal,
  NonComposable,
  PrecompositionMismatch,
  Invertible,
  RequiresIsomorphisms,
  WrongShape,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace levikit
