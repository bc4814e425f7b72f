#pragma once

#include <stdexcept>
#include <string>

namespace grcat {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range values, mismatched groups, bad serialization.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A size guard (table cells, oracle candidates, system size) would be exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

// Input is well-formed but is not a (normalized) 3-cocycle, or has no class.
class NotACocycle : public Error {
public:
    using Error::Error;
};

}  // namespace grcat
