#pragma once

#include <stdexcept>
#include <string>

namespace sfc {

/// Input violates a documented precondition (bad graph, bad pattern, bad parameter).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded (pattern too large, edge set too large for brute force).
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The algorithm does not support this input class (e.g. degree bound violated).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format error, carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace sfc
