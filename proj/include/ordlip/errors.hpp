#pragma once

#include <stdexcept>
#include <string>

namespace ordlip {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, out-of-range indices, bad schema.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Input that is well formed but outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class SizeCapError : public Error {
public:
    using Error::Error;
};

// An iterative method hit its cap before meeting its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

class NumericInstabilityError : public Error {
public:
    using Error::Error;
};

class NoDirectionError : public Error {
public:
    using Error::Error;
};

class SearchBudgetError : public Error {
public:
    using Error::Error;
};

// A target space does not meet the hypotheses an operation requires.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

} // namespace ordlip
