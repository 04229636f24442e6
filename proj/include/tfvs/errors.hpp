#pragma once

#include <stdexcept>
#include <string>

namespace tfvs {

// Base for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke a documented precondition (wrong order, non-T5-free input,
// malformed model, ...).  Maps to CLI exit code 1.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An internal guarantee failed.  These must never fire on valid inputs; when
// one does it is reported loudly rather than silently repaired.  Maps to CLI
// exit code 2.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace tfvs
