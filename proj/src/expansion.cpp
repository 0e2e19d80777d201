#include "multipoly/expansion.hpp"

#include <algorithm>
#include <cassert>

namespace multipoly {

namespace {

void validate_order(const Hypergraph& g, const std::vector<NodeId>& order) {
  Hypergraph current = g;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!current.has_node(order[i]) || !is_nest_point(current, order[i]))
      throw NotANestPointSequence(i);
    current = remove_node(current, order[i]);
  }
}

std::set<Edge> close_under_residues(const Hypergraph& g,
                                    const std::vector<NodeId>& order) {
  std::set<Edge> closed = g.edges();
  for (const Edge& e : g.edges()) {
    std::vector<NodeId> prefix;
    for (NodeId v : order) {
      prefix.push_back(v);
      std::vector<NodeId> sorted = prefix;
      std::sort(sorted.begin(), sorted.end());
      if (auto residue = e.without_all(sorted)) closed.insert(*residue);
    }
  }
  return closed;
}

}  // namespace

ExpandedHypergraph expand(const Hypergraph& g, const std::vector<NodeId>& order) {
  validate_order(g, order);

  ExpandedHypergraph result;
  result.base = g;
  result.order = order;
  std::set<Edge> closed = close_under_residues(g, order);
  for (const Edge& e : closed)
    if (!g.has_edge(e)) result.added.insert(e);
  result.expanded = Hypergraph(g.nodes(), std::move(closed));

  // The order survives expansion: the edges through each removed node are
  // unchanged at its removal step. Cheap to recheck, so recheck.
  assert(is_nest_point_sequence(result.expanded, order));
  if (!g.edges().empty()) {
    const std::size_t bound =
        static_cast<std::size_t>(std::max(0, rank(g) - 2)) * g.nodes().size() +
        g.edges().size();
    if (result.expanded.edges().size() > bound)
      throw std::logic_error("expansion exceeded its size bound");
  }
  return result;
}

bool is_expanded(const Hypergraph& g, const std::vector<NodeId>& order) {
  if (!is_nest_point_sequence(g, order)) return false;
  for (const Edge& e : g.edges()) {
    std::vector<NodeId> prefix;
    for (NodeId v : order) {
      prefix.push_back(v);
      std::vector<NodeId> sorted = prefix;
      std::sort(sorted.begin(), sorted.end());
      auto residue = e.without_all(sorted);
      if (residue && !g.has_edge(*residue)) return false;
    }
  }
  return true;
}

std::map<Edge, EdgeStructure> edge_structure(const ExpandedHypergraph& x) {
  std::map<Edge, EdgeStructure> table;
  for (const Edge& e : x.expanded.edges()) {
    auto first = std::find_if(x.order.begin(), x.order.end(),
                              [&](NodeId v) { return e.contains(v); });
    if (first == x.order.end()) continue;  // edge never meets the order
    const NodeId v = *first;

    std::vector<NodeId> rest;
    for (NodeId u : e.nodes())
      if (u != v) rest.push_back(u);
    EdgeStructure entry(e, v, VariableId::for_set(rest));

    // Largest proper sub-edge through v; uniqueness holds for genuinely
    // expanded inputs, so an equal-cardinality rival means corrupt data.
    std::optional<Edge> best;
    bool tie = false;
    for (const Edge& f : x.expanded.edges()) {
      if (!f.contains(v) || !f.strict_subset_of(e)) continue;
      if (!best || f.size() > best->size()) {
        best = f;
        tie = false;
      } else if (f.size() == best->size()) {
        tie = true;
      }
    }
    if (tie) throw AmbiguousF(e.to_string());
    if (best) {
      entry.in_M = true;
      entry.f_of_e = best;
      std::vector<NodeId> f_rest;
      for (NodeId u : best->nodes())
        if (u != v) f_rest.push_back(u);
      entry.f_prime = VariableId::for_set(f_rest);
    }
    table.emplace(e, std::move(entry));
  }
  return table;
}

}  // namespace multipoly
