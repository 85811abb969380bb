#ifndef DELTAQ_ERROR_HPP
#define DELTAQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace deltaq {

// Base class for all errors raised by the library.  Every failure mode that
// a caller can trigger (bad ranges, mismatched degrees, vanishing
// denominators, ...) derives from this so the CLI can map the whole family
// to a usage error uniformly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the documented domain of an operation.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// Two operands whose degrees (or sizes) must agree do not.
class DegreeMismatchError : public Error {
public:
    explicit DegreeMismatchError(const std::string& what) : Error(what) {}
};

// Coefficient reversal asked for a degree smaller than the actual degree,
// or applied to a non-polynomial (negative exponents present).
class DegreeOverflowError : public Error {
public:
    explicit DegreeOverflowError(const std::string& what) : Error(what) {}
};

// A quantity that must be a polynomial with nonnegative coefficients is not.
class NegativityError : public Error {
public:
    explicit NegativityError(const std::string& what) : Error(what) {}
};

// A Pochhammer symbol in a denominator position vanishes.
class VanishingDenominatorError : public Error {
public:
    explicit VanishingDenominatorError(const std::string& what) : Error(what) {}
};

// Internal consistency failure (e.g. a division that must be exact leaves a
// remainder).  Signals a bug, not a user error.
class InternalArithmeticError : public Error {
public:
    explicit InternalArithmeticError(const std::string& what) : Error(what) {}
};

// Malformed textual input (JSON documents, partition literals, cache lines).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Filesystem failure while loading or storing the persistent cache.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace deltaq

#endif
