#ifndef MULTIPOLY_HYPERGRAPH_HPP
#define MULTIPOLY_HYPERGRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "multipoly/errors.hpp"

namespace multipoly {

using NodeId = std::int64_t;

/// An edge is a set of at least two nodes, stored strictly sorted so that
/// set equality is list equality and the sorted form can key ordered
/// containers directly.
class Edge {
 public:
  explicit Edge(std::vector<NodeId> nodes);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeId v) const;
  bool subset_of(const Edge& other) const;
  bool strict_subset_of(const Edge& other) const;

  /// e \ {v}; nullopt once fewer than two nodes remain.
  std::optional<Edge> without(NodeId v) const;
  /// e \ S for a sorted list S; nullopt below cardinality two.
  std::optional<Edge> without_all(const std::vector<NodeId>& sorted_removed) const;

  std::string to_string() const;  // "{1,2,3}"

  friend auto operator<=>(const Edge& a, const Edge& b) { return a.nodes_ <=> b.nodes_; }
  friend bool operator==(const Edge& a, const Edge& b) { return a.nodes_ == b.nodes_; }

 private:
  std::vector<NodeId> nodes_;
};

/// Immutable node set plus deduplicated canonical edge set. All operations
/// below are pure; concurrent readers need no synchronization.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::set<NodeId> nodes, std::set<Edge> edges);

  /// Nodes inferred as the union of the edges.
  static Hypergraph from_edges(const std::vector<Edge>& edges);

  const std::set<NodeId>& nodes() const { return nodes_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_node(NodeId v) const { return nodes_.count(v) > 0; }
  bool has_edge(const Edge& e) const { return edges_.count(e) > 0; }
  bool empty() const { return nodes_.empty() && edges_.empty(); }

  /// Incident edges in canonical order.
  std::vector<Edge> edges_containing(NodeId v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::set<NodeId> nodes_;
  std::set<Edge> edges_;
};

struct RemoveNodeStats {
  int merged = 0;   // edges that collapsed onto an already-present set
  int dropped = 0;  // remnants of cardinality < 2
};

/// Removes v: deletes it from the node set, shrinks every incident edge and
/// drops remnants of cardinality < 2. Edges that collapse to the same set
/// merge silently; counts are reported through `stats` when given.
Hypergraph remove_node(const Hypergraph& g, NodeId v, RemoveNodeStats* stats = nullptr);

/// Maximum edge cardinality; 0 for an edgeless hypergraph.
int rank(const Hypergraph& g);

/// Edges not strictly contained in any other edge.
std::set<Edge> maximal_edges(const Hypergraph& g);

Hypergraph hg_union(const Hypergraph& a, const Hypergraph& b);
Hypergraph hg_intersection(const Hypergraph& a, const Hypergraph& b);

/// Line-oriented text format: optional `nodes <id>...` lines, one
/// `edge <id> <id>...` line per edge, `#` starts a comment. A JSON object
/// {"nodes":[...], "edges":[[...],...]} is accepted as well.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& g);

}  // namespace multipoly

#endif
