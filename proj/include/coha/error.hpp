#pragma once

#include <stdexcept>
#include <string>

namespace coha {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data that does not fit the quiver (wrong number of entries, unknown vertex, ...).
class IncompatibleError : public Error {
public:
    using Error::Error;
};

// Slope of the zero dimension vector.
class UndefinedSlopeError : public Error {
public:
    using Error::Error;
};

// An operation that needs a nonzero dimension vector got zero.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

// Exact division left a nonzero remainder.
class DivisionError : public Error {
public:
    using Error::Error;
};

// Polynomials over different alphabets were combined.
class AlphabetError : public Error {
public:
    using Error::Error;
};

// Operation is not defined for this input (e.g. non-symmetric quiver).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Read outside declared truncation bounds, or the bounds are too small.
class BoundsError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration would be too large.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace coha
