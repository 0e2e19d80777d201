#ifndef MULTIPOLY_EXPANSION_HPP
#define MULTIPOLY_EXPANSION_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "multipoly/acyclicity.hpp"
#include "multipoly/hypergraph.hpp"
#include "multipoly/variable.hpp"

namespace multipoly {

/// A hypergraph closed under taking residues of its edges along a nest-point
/// order: for every e in E' and every prefix of `order`, the residue of
/// cardinality >= 2 is again in E'. `added` holds E' \ E.
struct ExpandedHypergraph {
  Hypergraph base;
  std::vector<NodeId> order;
  Hypergraph expanded;
  std::set<Edge> added;
};

/// Closes g under residues along `order`. The order is validated by replay
/// (NotANestPointSequence with the failing index otherwise) and remains a
/// nest-point order of the result.
ExpandedHypergraph expand(const Hypergraph& g, const std::vector<NodeId>& order);

/// True iff order is a nest-point order of g and every residue of every edge
/// is already present.
bool is_expanded(const Hypergraph& g, const std::vector<NodeId>& order);

/// Per-edge anchors consumed by the extended formulation. v_of_e is the
/// earliest node of the order inside the edge; p_of_e is the edge minus that
/// node (a node variable when a singleton remains). When some edge strictly
/// inside e also contains v_of_e, the edge is in M and f_of_e is the unique
/// largest such sub-edge, with f_prime = f_of_e minus v_of_e.
struct EdgeStructure {
  Edge edge;
  NodeId v_of_e;
  VariableId p_of_e;
  bool in_M = false;
  std::optional<Edge> f_of_e;
  std::optional<VariableId> f_prime;

  EdgeStructure(Edge e, NodeId v, VariableId p)
      : edge(std::move(e)), v_of_e(v), p_of_e(std::move(p)) {}
};

/// Structure table for every edge of x.expanded that meets x.order. Two
/// maximal candidates for f_of_e raise AmbiguousF: that cannot happen for a
/// genuinely expanded input, so it signals corrupt data.
std::map<Edge, EdgeStructure> edge_structure(const ExpandedHypergraph& x);

}  // namespace multipoly

#endif
