#pragma once

#include <stdexcept>
#include <string>

namespace lingua {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A type invariant or definition-file constraint does not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its stated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// A word, state, symbol, or variable name is not declared.
class LookupError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed the configured cost cap.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace lingua
