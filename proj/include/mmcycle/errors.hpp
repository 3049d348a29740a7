#pragma once

#include <stdexcept>
#include <string>

namespace mmc {

/// Raised when an exact integer computation would leave the 64-bit range.
/// Silent wraparound is never acceptable anywhere in this library.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration oracle is asked for more than its budget allows.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text parsers; carries the 1-based line of the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace mmc
