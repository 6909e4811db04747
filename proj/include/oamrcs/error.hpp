#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oamrcs {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on a numeric argument was violated (cutoff, on-axis point, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number when one applies.
class FormatError : public Error {
public:
    FormatError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace oamrcs
