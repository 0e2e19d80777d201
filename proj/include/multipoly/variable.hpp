#ifndef MULTIPOLY_VARIABLE_HPP
#define MULTIPOLY_VARIABLE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "multipoly/hypergraph.hpp"

namespace multipoly {

/// Identifies z_p for p a node or an edge. Total order is nodes by id, then
/// edges lexicographically, so systems print in a stable order.
class VariableId {
 public:
  static VariableId node(NodeId v) { return VariableId(v); }
  static VariableId edge(Edge e) { return VariableId(std::move(e)); }

  /// For a nonempty node set: the node variable when the set is a singleton,
  /// the edge variable otherwise (z_{{u}} means z_u).
  static VariableId for_set(const std::vector<NodeId>& sorted_nodes);

  bool is_node() const { return !edge_.has_value(); }
  bool is_edge() const { return edge_.has_value(); }
  NodeId node_id() const { return node_; }
  const Edge& edge_ref() const { return *edge_; }

  /// "z7" for nodes, "zE_1_2_3" for edges; also the LP-file column name.
  std::string name() const;
  static std::optional<VariableId> parse_name(std::string_view name);

  friend bool operator==(const VariableId& a, const VariableId& b) {
    return a.edge_ == b.edge_ && a.node_ == b.node_;
  }
  friend std::strong_ordering operator<=>(const VariableId& a, const VariableId& b) {
    if (a.is_node() != b.is_node()) return a.is_node() ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    if (a.is_node()) return a.node_ <=> b.node_;
    return *a.edge_ <=> *b.edge_;
  }

 private:
  explicit VariableId(NodeId v) : node_(v) {}
  explicit VariableId(Edge e) : node_(0), edge_(std::move(e)) {}

  NodeId node_;
  std::optional<Edge> edge_;
};

}  // namespace multipoly

#endif
