#pragma once

#include <stdexcept>
#include <string>

namespace introots {

/// Raised when an exact result does not fit the 128-bit integer range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised for rejected inputs: zero leading coefficients, negative isqrt
/// arguments, generator parameters outside their family, and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Never a data condition; seeing one
/// means a fast path disagrees with exact arithmetic or with the oracle.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define INTROOTS_ENSURE(cond, msg)                                              \
    do {                                                                        \
        if (!(cond)) throw ::introots::InvariantError(std::string(msg));        \
    } while (false)

}  // namespace introots
