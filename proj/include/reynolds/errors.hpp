#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reynolds {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division-like operation on an element with vanishing constant term.
struct NonInvertible : Error {
    using Error::Error;
};

/// A stated hypothesis of the operation does not hold for the given inputs.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// A product or derivative left the enumerated basis range of the algebra.
struct IndexOverflow : Error {
    using Error::Error;
};

/// Two tensor operands live over different base algebras.
struct AlgebraMismatch : Error {
    using Error::Error;
};

/// The requested identity needs an operator the model does not provide.
struct MissingOperator : Error {
    using Error::Error;
};

/// Evaluation met a symbol with no binding.
struct UnboundSymbol : Error {
    using Error::Error;
};

/// The structure map has no image for a basis index.
struct EmbeddingUndefined : Error {
    using Error::Error;
};

/// Expression node not handled by the requested transformation.
struct UnsupportedNode : Error {
    using Error::Error;
};

/// Parse failure, carrying the byte offset and the expected-token set.
struct SyntaxError : Error {
    std::size_t offset;
    std::string expected;

    SyntaxError(std::size_t at, std::string expected_tokens)
        : Error("syntax error at byte " + std::to_string(at) + ": expected " + expected_tokens),
          offset(at), expected(std::move(expected_tokens)) {}
};

} // namespace reynolds
