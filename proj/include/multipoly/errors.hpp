#ifndef MULTIPOLY_ERRORS_HPP
#define MULTIPOLY_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multipoly {

/// A node id was used with a hypergraph that does not contain it.
class UnknownNode : public std::runtime_error {
 public:
  explicit UnknownNode(std::int64_t id)
      : std::runtime_error("unknown node " + std::to_string(id)), id_(id) {}
  std::int64_t id() const { return id_; }

 private:
  std::int64_t id_;
};

/// Malformed input text. Carries 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Structurally invalid hypergraph data (loop edge, duplicate edge, edge
/// through an undeclared node).
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error("invariant violation: " + what) {}
};

/// The supplied node order fails the nest-point replay at `index`.
class NotANestPointSequence : public std::runtime_error {
 public:
  explicit NotANestPointSequence(std::size_t index)
      : std::runtime_error("node at position " + std::to_string(index) +
                           " is not a nest point of the residual hypergraph"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Two proper sub-edges of maximum cardinality through the anchor node; the
/// input cannot be an expanded hypergraph.
class AmbiguousF : public std::runtime_error {
 public:
  explicit AmbiguousF(const std::string& edge_repr)
      : std::runtime_error("ambiguous maximal sub-edge for " + edge_repr) {}
};

/// The edges handed to the chain-form convex hull are not totally ordered.
class NotAChain : public std::runtime_error {
 public:
  NotAChain() : std::runtime_error("edges do not form a chain under inclusion") {}
  explicit NotAChain(const std::string& what) : std::runtime_error(what) {}
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  explicit SizeLimitExceeded(const std::string& what)
      : std::runtime_error("size limit exceeded: " + what) {}
};

class HypothesisViolated : public std::runtime_error {
 public:
  explicit HypothesisViolated(const std::string& what)
      : std::runtime_error(what) {}
};

/// Witness set w_k that is not admissible for its running-intersection slot.
class InvalidW : public std::runtime_error {
 public:
  explicit InvalidW(const std::string& what) : std::runtime_error(what) {}
};

class BadParameter : public std::invalid_argument {
 public:
  explicit BadParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Integer scaling needed by the LP writer exceeds the digit budget.
class RequiresScaling : public std::runtime_error {
 public:
  explicit RequiresScaling(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multipoly

#endif
