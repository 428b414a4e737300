#pragma once

#include <stdexcept>
#include <string>

namespace qonion {

// Every failure the model can signal. The simulator records these in the
// transcript and the CLI maps a subset to stable exit codes.
enum class ErrorKind {
  // config / input
  ParseError,
  ValidationError,
  TargetNotFound,
  // crypto
  MalformedCiphertext,
  DecapsulationFailure,
  UnsupportedAlgorithm,
  // link layer
  DuplicatePool,
  PoolExhausted,
  AuthenticationFailure,
  IndexOutOfRange,
  LengthMismatch,
  // topology
  DanglingEdge,
  DuplicateNode,
  NoPath,
  RequireIntermediate,
  SignatureRejected,
  // onion protocol
  HeadBlockOverflow,
  CircuitTooShort,
  LayerOverflow,
  TagInvalid,
  LayerMalformed,
  SizeViolation,
  ReplayDetected,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qonion
