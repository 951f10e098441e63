#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polgame {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lexical or syntactic error; `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

/// A connective or literal was applied to operands of the wrong polarity.
struct PolarityError : Error {
    using Error::Error;
};

/// Two sibling branches carry the same label.
struct DuplicateLabelError : Error {
    using Error::Error;
};

/// Expansion (or another node-producing construction) ran past its budget.
struct BudgetExceededError : Error {
    BudgetExceededError(std::size_t produced, std::size_t budget)
        : Error("node budget exceeded: produced " + std::to_string(produced) +
                " nodes (budget " + std::to_string(budget) + ")"),
          nodes_produced(produced) {}
    std::size_t nodes_produced;
};

/// Raised by the graph/analytics layer on bang/quest, which it does not size.
struct UnsupportedConnectiveError : Error {
    using Error::Error;
};

/// A proof term does not derive the claimed sequent. `rule` names the failing
/// inference, `path` the branch labels leading to the offending subterm.
struct TypeError : Error {
    TypeError(std::string rule_, std::string path_, const std::string& what)
        : Error("type error [" + rule_ + "] at '" + path_ + "': " + what),
          rule(std::move(rule_)), path(std::move(path_)) {}
    std::string rule;
    std::string path;
};

/// The cut-elimination rewriter met a redex no rule covers (ill-typed input).
struct StuckTermError : Error {
    using Error::Error;
};

} // namespace polgame
