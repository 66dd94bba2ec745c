#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffdyn {

enum class ErrorKind {
    ZeroDenominator,
    ZeroInput,
    InvalidField,
    NotIrreducible,
    NotSquarefree,
    WildUnsupported,
    PrecisionExhausted,
    InsufficientPrecision,
    NoEmbedding,
    EmbeddingUnavailable,
    NotInvertible,
    Inseparable,
    DegreeTooLow,
    IdenticallyUndefined,
    EqualPoints,
    InfinityOperand,
    NotDistinct,
    FiberTooSmall,
    NotWandering,
    SyntaxError,
    ConfigError,
    InvalidArgument,
    FieldMismatch,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ffdyn
