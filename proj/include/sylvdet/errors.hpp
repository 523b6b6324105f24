#pragma once

#include <stdexcept>
#include <string>

namespace sylvdet {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two interpolation nodes share an abscissa.
class DuplicateNode : public Error {
public:
    using Error::Error;
};

/// A coefficient formula divides by zero for the given parameters.
class DegenerateParams : public Error {
public:
    using Error::Error;
};

class BadDimension : public Error {
public:
    using Error::Error;
};

/// The requested operation has no meaning for this family.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Exact elimination found a zero pivot column.
class Singular : public Error {
public:
    Singular(const std::string& what, std::size_t step) : Error(what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Rejection sampling ran out of retries. Points to an over-constrained predicate.
class SamplingExhausted : public Error {
public:
    using Error::Error;
};

/// Malformed user input (parameter names, rational literals).
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace sylvdet
