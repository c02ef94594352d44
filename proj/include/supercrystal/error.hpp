#pragma once

#include <stdexcept>
#include <string>

namespace supercrystal {

/// Raised on malformed input: bad letters, inadmissible shapes, broken
/// invariants of user-supplied data.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an exhaustive search would exceed its state cap.  The
/// answer is unknown, not false.
class IndeterminateError : public std::runtime_error {
public:
    explicit IndeterminateError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a closure theorem is violated by a computed result.  Seeing
/// one of these means a bug in the library, not in the input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace supercrystal
