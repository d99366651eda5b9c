#ifndef DIFFMOD_ERRORS_HPP
#define DIFFMOD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffmod {

/// Malformed input text. Carries the byte offset of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Violated operation precondition: weight mismatch, division by zero,
/// critical weight, unsupported parameter.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Broken internal invariant. Not reachable through documented inputs.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace diffmod

#endif
