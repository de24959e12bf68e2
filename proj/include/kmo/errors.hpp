#pragma once

#include <stdexcept>
#include <string>

namespace kmo {

/// Two operands belong to different quotient rings (their k parameters differ).
class ParameterMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller-supplied argument violates a documented precondition (k < 1, r > n, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two evaluation routes that must agree did not. Always a bug, never a user error.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kmo
