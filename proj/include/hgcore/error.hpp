#ifndef HGCORE_ERROR_HPP
#define HGCORE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgcore {

/// Malformed or rejected input. `line()` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An oracle or enumeration was asked to run beyond its size cap.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hgcore

#endif // HGCORE_ERROR_HPP
