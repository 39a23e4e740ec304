#ifndef TREESPAN_ERRORS_HPP_
#define TREESPAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace treespan {

// Error taxonomy mirrored by the CLI exit codes (see tools/).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedGraphError : std::runtime_error {
  explicit DisconnectedGraphError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDecompositionError : std::runtime_error {
  explicit InvalidDecompositionError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSpanningTreeError : std::runtime_error {
  explicit NotSpanningTreeError(const std::string& what) : std::runtime_error(what) {}
};

// A measured quantity contradicts a guarantee the construction relies on.
// Reaching this from library code means a bug, not a user error.
struct BoundViolationError : std::logic_error {
  explicit BoundViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace treespan

#endif  // TREESPAN_ERRORS_HPP_
