#pragma once

#include <stdexcept>
#include <string>

namespace gausskit {

// Base for all numerical / usage failures raised by the library.
// The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

struct InvalidDomain : Error {
    explicit InvalidDomain(const std::string& msg) : Error(msg) {}
};

struct Singular : Error {
    explicit Singular(const std::string& msg) : Error(msg) {}
};

struct ZeroStep : Error {
    explicit ZeroStep(const std::string& msg) : Error(msg) {}
};

struct DuplicateNodes : Error {
    explicit DuplicateNodes(const std::string& msg) : Error(msg) {}
};

struct OrderTooHigh : Error {
    explicit OrderTooHigh(const std::string& msg) : Error(msg) {}
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& msg) : Error(msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

struct EdgeLeakage : Error {
    explicit EdgeLeakage(const std::string& msg) : Error(msg) {}
};

struct FrequencyBound : Error {
    explicit FrequencyBound(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace gausskit
