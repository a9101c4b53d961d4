#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hombol {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural misuse: the input lacks (or carries) a component the
// operation needs. The CLI maps these to exit code 2.
struct DimensionMismatch : Error { using Error::Error; };
struct NonHomogeneous : Error { using Error::Error; };
struct MissingBinary : Error { using Error::Error; };
struct MissingTernary : Error { using Error::Error; };
struct NonzeroBinary : Error { using Error::Error; };
struct UnexpectedTwist : Error { using Error::Error; };
struct MissingOperation : Error { using Error::Error; };
struct InvalidParam : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

// Violated hypotheses of the construction theorems. The CLI maps these
// to exit code 1 and names the hypothesis.
struct HypothesisError : Error { using Error::Error; };
struct NotEven : HypothesisError { using HypothesisError::HypothesisError; };
struct NotMorphism : HypothesisError { using HypothesisError::HypothesisError; };
struct NotCommuting : HypothesisError { using HypothesisError::HypothesisError; };
struct NotRightAlternative : HypothesisError { using HypothesisError::HypothesisError; };
struct NotMultiplicative : HypothesisError { using HypothesisError::HypothesisError; };
struct NotSupercommutative : HypothesisError { using HypothesisError::HypothesisError; };

/// Parse failure with position and the token set that was expected.
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line, std::size_t column, std::string expected_tokens)
        : Error(std::move(msg)), line(line), column(column), expected(std::move(expected_tokens)) {}
    std::size_t line;
    std::size_t column;
    std::string expected;
};

}  // namespace hombol
