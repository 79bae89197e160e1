#pragma once

#include <stdexcept>
#include <string>

namespace uavc {

enum class ErrorKind {
    Format,       // malformed or truncated input file
    Unsupported,  // recognized but unsupported encoding
    Config,       // invalid parameter or configuration value
    Contract,     // API precondition violated
    Protocol,     // experiment-protocol violation (e.g. augmented sample in eval)
    Io,           // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace uavc
