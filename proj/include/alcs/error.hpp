#pragma once
/**
 * @file error.hpp
 * @brief Library-wide error codes and the exception type that carries them.
 */

#include <stdexcept>
#include <string>

namespace alcs {

// Every recoverable failure carries one of these codes so callers and tests
// can dispatch on the condition instead of parsing message text.
enum class errc {
    EmptyString,
    TooFewStrings,
    LetterOutOfAlphabet,
    LengthMismatch,
    EmptyLetterSet,
    NegativeBudget,
    IndexOutOfRange,
    WrongMetric,
    ThresholdOutOfRange,
    SubsetExplosion,
    UnsupportedMetric,
    BudgetExceeded,
    DimensionMismatch,
    ParseError,
    EmptySequence,
    UnknownIUPACCode,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace alcs
