#pragma once

#include <stdexcept>
#include <string>

namespace ucycle {

enum class Errc {
    empty_window_set,
    no_common_window,
    not_summable,
    length_not_divisible,
    precondition_violated,
    constraint_unsatisfied,
    alphabet_mismatch,
    parse_error,
    verification_failed,
    budget_exceeded,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::empty_window_set: return "EmptyWindowSet";
        case Errc::no_common_window: return "NoCommonWindow";
        case Errc::not_summable: return "NotSummable";
        case Errc::length_not_divisible: return "LengthNotDivisible";
        case Errc::precondition_violated: return "PreconditionViolated";
        case Errc::constraint_unsatisfied: return "ConstraintUnsatisfied";
        case Errc::alphabet_mismatch: return "AlphabetMismatch";
        case Errc::parse_error: return "ParseError";
        case Errc::verification_failed: return "VerificationFailed";
        case Errc::budget_exceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
    if (!condition) raise(code, message);
}

}  // namespace ucycle
