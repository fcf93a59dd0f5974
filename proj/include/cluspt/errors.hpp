#pragma once

#include <stdexcept>
#include <string>

namespace cluspt {

// Bad flags, bad configuration, out-of-contract arguments. CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable, unparsable or invalid instances. CLI exit code 2.
class InstanceError : public std::runtime_error {
public:
    explicit InstanceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance file syntax error with a 1-based line number.
class ParseError : public InstanceError {
public:
    ParseError(int line, const std::string& msg)
        : InstanceError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Broken internal invariant (corrupt individual, stuck construction, ...).
// CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace cluspt
