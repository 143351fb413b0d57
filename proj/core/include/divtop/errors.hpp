#ifndef DIVTOP_ERRORS_HPP
#define DIVTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divtop {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed or out-of-contract input (maps to CLI exit code 2). */
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/** Integer arithmetic left the representable range. Never ignored, never wrapped. */
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/** An internal consistency condition failed; indicates a bug, not bad input. */
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

} // namespace divtop

#endif
