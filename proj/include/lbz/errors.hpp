#pragma once

#include <stdexcept>
#include <string>

namespace lbz {

// Thrown on malformed textual input (terms, rationals, H-elements, theta
// expressions, identity/assignment files). `position` is a 0-based byte
// offset into the offending string where scanning stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Requested builtin variety name does not exist.
class UnknownVarietyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation was refused because it exceeds the configured degree bound.
class ResourceBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural invariant that should hold by construction failed; indicates
// a bug or inconsistent data, never bad user input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace lbz
