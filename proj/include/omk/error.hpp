#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace omk {

/// Broad failure category; the CLI maps each one to an exit code.
enum class ErrorKind {
    input,       ///< malformed or inconsistent user data
    hypothesis,  ///< a theorem's hypothesis does not hold for the input
    resource,    ///< a configured cap was hit
    internal,    ///< an exactness self-check failed
};

/**
 * Every failure raised by the library. `code()` is a stable identifier
 * (e.g. "OrderMismatch") that golden files and scripts can match on.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::input, "ParseError",
                "at position " + std::to_string(position) + ": " + message),
          position_(position), detail_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const char* code, const std::string& message) {
    throw Error(kind, code, message);
}

}  // namespace detail

}  // namespace omk
