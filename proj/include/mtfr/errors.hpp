#ifndef MTFR_ERRORS_HPP
#define MTFR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtfr {

enum class ErrorCode {
    Syntax,           // malformed topology document
    Schema,           // missing field or bad enum value
    Invariant,        // document violates a NetworkSpec invariant
    NotStar,          // operation requires a star-mode network
    NotUnidirectional,
    NotBidirectional,
    InvalidRemoval,   // unknown id, SOURCE id, or unknown dependency arc
    TooLarge,         // instance exceeds the brute-force guard
    TruncatedInput,   // cycle set was truncated, greedy refuses it
    EmptyResult,
    Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace mtfr

#endif
