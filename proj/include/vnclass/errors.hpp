#pragma once

#include <stdexcept>
#include <string>

namespace vnclass {

/// Caller passed an argument outside an operation's domain.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed to hold; indicates a bug, not bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Checked 64-bit arithmetic would have wrapped.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// The request exceeds a memory or enumeration budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vnclass
