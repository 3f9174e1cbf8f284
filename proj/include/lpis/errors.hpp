#ifndef LPIS_ERRORS_HPP
#define LPIS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpis {

/// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (model files, subalgebra strings, flags).
class InputError : public Error {
public:
    using Error::Error;
};

/// Syntax error in the coefficient language, carrying a 0-based offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), message_(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Evaluation hit a vanishing denominator; the caller should pick another point.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Numerical procedure could not continue (branch collision, singular point).
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace lpis

#endif
