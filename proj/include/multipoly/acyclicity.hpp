#ifndef MULTIPOLY_ACYCLICITY_HPP
#define MULTIPOLY_ACYCLICITY_HPP

#include <optional>
#include <vector>

#include "multipoly/hypergraph.hpp"

namespace multipoly {

/// Greedy elimination record: order[i] was a nest point of g minus
/// order[0..i), and residual is g minus all of order.
struct NestPointSequence {
  std::vector<NodeId> order;
  Hypergraph residual;
};

/// True iff the edges of g containing v form a chain under inclusion.
/// An isolated node counts (the empty family is a chain).
bool is_nest_point(const Hypergraph& g, NodeId v);

/// Removes the smallest-id nest point until none exists or max_len nodes
/// were removed. Smallest-id tie-breaking keeps everything downstream
/// deterministic.
NestPointSequence nest_point_sequence(const Hypergraph& g,
                                      std::optional<std::size_t> max_len = std::nullopt);

/// Replays `order` and checks each node is a nest point when its turn comes.
bool is_nest_point_sequence(const Hypergraph& g, const std::vector<NodeId>& order);

/// A hypergraph is beta-acyclic exactly when greedy nest-point elimination
/// empties it.
bool is_beta_acyclic(const Hypergraph& g);

/// Alternating node/edge cycle: nodes[i] lies in edges[i-1] and edges[i]
/// (indices mod t) and in no other edge of the cycle; t >= 3.
struct BetaCycle {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
};

bool validate_beta_cycle(const Hypergraph& g, const BetaCycle& cycle);

/// Exhaustive witness search, intended as a test oracle only. Gated at
/// |V| <= 10 and |E| <= 10; throws SizeLimitExceeded beyond that.
std::optional<BetaCycle> find_beta_cycle(const Hypergraph& g);

}  // namespace multipoly

#endif
