#ifndef SQZERO_ERROR_HPP
#define SQZERO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sqz {

/// Malformed or out-of-range input supplied by a caller (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on an argument that violates its precondition,
/// e.g. applying a move whose inequality chain does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A result failed an internal consistency check.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request is well formed but outside what the library computes.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sqz

#endif // SQZERO_ERROR_HPP
