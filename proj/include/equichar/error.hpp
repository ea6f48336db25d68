#pragma once

#include <stdexcept>
#include <string>

namespace equichar {

/// Malformed input: unparsable files, unknown vertices, non-bijective maps.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an operation's mathematical precondition
/// (non-admissible action, group that is not a p-group, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size bound was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would have wrapped.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant; always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace equichar
