#pragma once

#include <stdexcept>
#include <string>

namespace tcs {

/// Raised when caller-supplied data violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an identity that must hold by construction fails.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tcs
