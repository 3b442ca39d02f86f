#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: invalid Cartan data, unknown series, words that do not parse.
class InvalidCartan : public Error {
public:
    using Error::Error;
};

class NotFiniteType : public Error {
public:
    using Error::Error;
};

class CapacityExceeded : public Error {
public:
    using Error::Error;
};

class GroupMismatch : public Error {
public:
    using Error::Error;
};

class NotARoot : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class CacheCorrupt : public Error {
public:
    using Error::Error;
};

/// Raised when a proved identity or an internal consistency check fails.
/// These always indicate a bug in this library, never a mathematical finding;
/// the CLI maps them to exit code 2.
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class InexactDivision : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class CalibrationFailure : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class MirrorMismatch : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class ParityViolation : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class LemmaViolation : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class SingularSystem : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class PathDisagreement : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

} // namespace schubert
