#pragma once

#include <stdexcept>
#include <string>

namespace thermoflow {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Domain-object construction failures (bad matrices, bad measures, bad blocks).
class ValidationError : public Error {
public:
    using Error::Error;
};

class RejectAlphabetTooSmall : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RejectDeadSymbol : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RejectNotPrimitive : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class WordTooShort : public Error {
public:
    using Error::Error;
};

class MismatchedSft : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class BracketFailure : public Error {
public:
    using Error::Error;
};

class NotInL : public Error {
public:
    using Error::Error;
};

class NotZeroPressure : public Error {
public:
    using Error::Error;
};

class NotPositive : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateDelta : public Error {
public:
    using Error::Error;
};

// Raised when almost_equilibria cannot produce the requested number of
// pairwise-distinct measures; carries how many were actually separated.
class CannotSeparate : public Error {
public:
    CannotSeparate(const std::string& what, int requested, int achieved)
        : Error(what), requested_(requested), achieved_(achieved) {}
    int requested() const noexcept { return requested_; }
    int achieved() const noexcept { return achieved_; }

private:
    int requested_;
    int achieved_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace thermoflow
