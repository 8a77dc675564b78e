#ifndef TCG_ERRORS_HPP
#define TCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tcg {

// Base for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A profile that was required to be a spanning tree contains a cycle.
struct NotATreeError : Error {
    using Error::Error;
};

// Malformed textual input; `position` is a byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct InvalidPolicyError : Error {
    using Error::Error;
};

// Enumeration or search size exceeds the configured cap.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Balanced-tree construction would exceed the node cap.
struct OverflowError : Error {
    using Error::Error;
};

// Node arguments do not satisfy the positional precondition of a predicate
// (wrong ancestor/sibling/level relation).
struct InvalidNodesError : Error {
    using Error::Error;
};

// A path-game deviation search ran out of its node budget.
struct SearchBudgetError : Error {
    using Error::Error;
};

}  // namespace tcg

#endif
