#include "ffdyn/error.hpp"

namespace ffdyn {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::WildUnsupported: return "WildUnsupported";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorKind::NoEmbedding: return "NoEmbedding";
        case ErrorKind::EmbeddingUnavailable: return "EmbeddingUnavailable";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::Inseparable: return "Inseparable";
        case ErrorKind::DegreeTooLow: return "DegreeTooLow";
        case ErrorKind::IdenticallyUndefined: return "IdenticallyUndefined";
        case ErrorKind::EqualPoints: return "EqualPoints";
        case ErrorKind::InfinityOperand: return "InfinityOperand";
        case ErrorKind::NotDistinct: return "NotDistinct";
        case ErrorKind::FiberTooSmall: return "FiberTooSmall";
        case ErrorKind::NotWandering: return "NotWandering";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
    }
    return "Unknown";
}

}  // namespace ffdyn
