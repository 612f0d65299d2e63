#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnkit {

/// Malformed input text. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A caller broke an operation's contract (bad ids, bad parameters).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A certificate (schedule, cover, assignment) failed validation.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An instance exceeds a hard size bound of an exhaustive routine.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check inside an algorithm failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace burnkit
