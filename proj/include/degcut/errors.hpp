#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degcut {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (loop edge, vertex out of
/// range, k below the supported minimum, ...).
class invalid_input : public error {
public:
    using error::error;
};

/// Malformed graph6 text. `offset()` is the byte position inside the line and
/// `line()` the 1-based line number when the text came from a stream (0 otherwise).
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset, std::size_t line = 0)
        : error(format(what, offset, line)), reason_(what), offset_(offset), line_(line) {}

    const std::string& reason() const noexcept { return reason_; }
    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& what, std::size_t offset, std::size_t line) {
        std::string out = "graph6: " + what + " at byte " + std::to_string(offset);
        if (line != 0)
            out += " of line " + std::to_string(line);
        return out;
    }

    std::string reason_;
    std::size_t offset_;
    std::size_t line_;
};

/// A discharging scheme that does not fit the graph it is applied to.
class config_error : public error {
public:
    using error::error;
};

/// Raised when an operation needs a vertex cut but the graph is complete.
class no_cuts_exist : public error {
public:
    no_cuts_exist() : error("no cuts exist") {}
};

} // namespace degcut
