#pragma once

#include <stdexcept>
#include <string>

namespace tuttepo {

/// Input violates an operation's precondition (disconnected graph, missing
/// edge, mismatched class, theorem hypothesis not met).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input exceeds a configured size bound (canonicalization, oracle, enumerator caps).
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Malformed text input. `position` is a 0-based offset into the parsed text.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t position)
        : DomainError(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace tuttepo
