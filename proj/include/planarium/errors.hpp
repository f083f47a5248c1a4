#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace planarium {

// Runtime error carrying a stable machine-readable code ("NonPrime",
// "DivisionByZero", ...) next to the human message. The CLI maps any
// Error to a nonzero exit and prints code + message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

}  // namespace planarium
