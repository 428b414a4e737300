#include "qonion/errors.hpp"

namespace qonion {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::TargetNotFound: return "TargetNotFound";
    case ErrorKind::MalformedCiphertext: return "MalformedCiphertext";
    case ErrorKind::DecapsulationFailure: return "DecapsulationFailure";
    case ErrorKind::UnsupportedAlgorithm: return "UnsupportedAlgorithm";
    case ErrorKind::DuplicatePool: return "DuplicatePool";
    case ErrorKind::PoolExhausted: return "PoolExhausted";
    case ErrorKind::AuthenticationFailure: return "AuthenticationFailure";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::RequireIntermediate: return "RequireIntermediate";
    case ErrorKind::SignatureRejected: return "SignatureRejected";
    case ErrorKind::HeadBlockOverflow: return "HeadBlockOverflow";
    case ErrorKind::CircuitTooShort: return "CircuitTooShort";
    case ErrorKind::LayerOverflow: return "LayerOverflow";
    case ErrorKind::TagInvalid: return "TagInvalid";
    case ErrorKind::LayerMalformed: return "LayerMalformed";
    case ErrorKind::SizeViolation: return "SizeViolation";
    case ErrorKind::ReplayDetected: return "ReplayDetected";
  }
  return "UnknownError";
}

}  // namespace qonion
