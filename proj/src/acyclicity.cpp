#include "multipoly/acyclicity.hpp"

#include <algorithm>

namespace multipoly {

bool is_nest_point(const Hypergraph& g, NodeId v) {
  if (!g.has_node(v)) throw UnknownNode(v);
  std::vector<Edge> incident = g.edges_containing(v);
  // Chain check after sorting by cardinality: distinct edges of equal size
  // can never nest, and consecutive containment is transitive.
  std::sort(incident.begin(), incident.end(), [](const Edge& a, const Edge& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (std::size_t i = 0; i + 1 < incident.size(); ++i)
    if (!incident[i].strict_subset_of(incident[i + 1])) return false;
  return true;
}

NestPointSequence nest_point_sequence(const Hypergraph& g,
                                      std::optional<std::size_t> max_len) {
  NestPointSequence result;
  result.residual = g;
  while (!max_len || result.order.size() < *max_len) {
    std::optional<NodeId> pick;
    for (NodeId v : result.residual.nodes()) {
      if (is_nest_point(result.residual, v)) {
        pick = v;  // nodes() iterates ascending, so this is the smallest id
        break;
      }
    }
    if (!pick) break;
    result.order.push_back(*pick);
    result.residual = remove_node(result.residual, *pick);
  }
  return result;
}

bool is_nest_point_sequence(const Hypergraph& g, const std::vector<NodeId>& order) {
  Hypergraph current = g;
  for (NodeId v : order) {
    if (!current.has_node(v)) return false;
    if (!is_nest_point(current, v)) return false;
    current = remove_node(current, v);
  }
  return true;
}

bool is_beta_acyclic(const Hypergraph& g) {
  return nest_point_sequence(g).residual.empty();
}

bool validate_beta_cycle(const Hypergraph& g, const BetaCycle& cycle) {
  const std::size_t t = cycle.nodes.size();
  if (t < 3 || cycle.edges.size() != t) return false;
  for (const Edge& e : cycle.edges)
    if (!g.has_edge(e)) return false;
  std::set<NodeId> node_set(cycle.nodes.begin(), cycle.nodes.end());
  std::set<Edge> edge_set(cycle.edges.begin(), cycle.edges.end());
  if (node_set.size() != t || edge_set.size() != t) return false;
  for (std::size_t i = 0; i < t; ++i) {
    const NodeId v = cycle.nodes[i];
    const Edge& before = cycle.edges[(i + t - 1) % t];
    const Edge& after = cycle.edges[i];
    if (!before.contains(v) || !after.contains(v)) return false;
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i || j == (i + t - 1) % t) continue;
      if (cycle.edges[j].contains(v)) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search over alternating (node, edge) choices. At position pos
// the node is picked first, then the edge, with the membership pattern
// checked incrementally: nodes[i] must lie in edges[i-1] and edges[i]
// (cyclically) and in no other chosen edge.
struct CycleSearch {
  const std::vector<Edge>& edges;
  std::size_t t;
  std::vector<NodeId> nodes;
  std::vector<int> edge_idx;

  bool node_ok(NodeId v, std::size_t pos) const {
    for (std::size_t i = 0; i < pos; ++i)
      if (nodes[i] == v) return false;
    if (pos > 0 && !edges[edge_idx[pos - 1]].contains(v)) return false;
    for (std::size_t i = 0; i + 1 < pos; ++i)
      if (edges[edge_idx[i]].contains(v)) return false;
    return true;
  }

  bool edge_ok(const Edge& e, std::size_t pos) const {
    if (!e.contains(nodes[pos])) return false;
    const bool closing = pos + 1 == t;
    if (closing && !e.contains(nodes[0])) return false;
    for (std::size_t i = closing ? 1 : 0; i < pos; ++i)
      if (e.contains(nodes[i])) return false;
    return true;
  }

  bool extend(std::size_t pos, const Hypergraph& g) {
    if (pos == t) return true;
    for (NodeId v : g.nodes()) {
      if (!node_ok(v, pos)) continue;
      nodes[pos] = v;
      for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
        bool used = false;
        for (std::size_t i = 0; i < pos; ++i)
          if (edge_idx[i] == ei) used = true;
        if (used || !edge_ok(edges[ei], pos)) continue;
        edge_idx[pos] = ei;
        if (extend(pos + 1, g)) return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<BetaCycle> find_beta_cycle(const Hypergraph& g) {
  if (g.nodes().size() > 10 || g.edges().size() > 10)
    throw SizeLimitExceeded("beta-cycle search is gated at 10 nodes / 10 edges");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (edges.size() < 3) return std::nullopt;

  const std::size_t max_t = std::min(g.nodes().size(), edges.size());
  for (std::size_t t = 3; t <= max_t; ++t) {
    CycleSearch search{edges, t, std::vector<NodeId>(t), std::vector<int>(t)};
    if (search.extend(0, g)) {
      BetaCycle cycle;
      cycle.nodes = search.nodes;
      for (int ei : search.edge_idx) cycle.edges.push_back(edges[ei]);
      if (!validate_beta_cycle(g, cycle))
        throw std::logic_error("cycle search produced an invalid witness");
      return cycle;
    }
  }
  return std::nullopt;
}

}  // namespace multipoly
