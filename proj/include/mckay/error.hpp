// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mckay {

/// Domain error with a stable machine-readable name.  The CLI prints the
/// name on the diagnostic stream and maps any Error to exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Text input error carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("ParseError",
                message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
    throw Error(std::move(name), message);
}

} // namespace mckay
