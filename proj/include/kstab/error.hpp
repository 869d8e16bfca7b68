#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kstab {

enum class ErrorCode {
    DivisionByZero,
    DimensionMismatch,
    OutOfRange,
    NotNegativeDefinite,
    NotADEConfiguration,
    NotProperTransform,
    SingularGram,
    NoDominantRepresentative,
    MalformedChain,
    UnknownTag,
    InvalidMultiplicities,
    NotLogFano,
    MissingOrd,
    UnknownId,
    ParseError,
    SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every engine failure is reported through this type; the code lets callers
// (and the CLI exit-code mapping) distinguish input errors from invariant
// violations without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kstab
