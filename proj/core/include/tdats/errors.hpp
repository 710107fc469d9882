#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tdats {

// Error categories map onto CLI exit codes; code() is the stable
// machine-readable tag printed on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid argument values, out-of-range sizes, unknown labels.  Exit code 2.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& message) : Error("parameter", message) {}
};

// Unreadable or malformed input files.  Exit code 3.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::string code = "parse")
        : Error(std::move(code), message) {}
};

// Structurally valid input on which the requested computation is undefined
// (zero variance, zero norm, ...).  Exit code 4.
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& message) : Error("degenerate", message) {}
};

}  // namespace tdats
