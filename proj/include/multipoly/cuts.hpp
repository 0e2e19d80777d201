#ifndef MULTIPOLY_CUTS_HPP
#define MULTIPOLY_CUTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "multipoly/hypergraph.hpp"
#include "multipoly/system.hpp"

namespace multipoly {

/// Ordering p_1..p_m of a set family where each set's overlap with its
/// predecessors fits inside a single predecessor. n_sets[k] is
/// p_k intersect (p_1 u ... u p_{k-1}); n_sets[0] is empty.
struct RunningIntersectionOrdering {
  std::vector<std::vector<NodeId>> sets;
  std::vector<std::vector<NodeId>> n_sets;
};

/// Finds a running-intersection ordering, or nullopt when none exists.
/// Route: maximum-weight spanning tree on pairwise intersection sizes with a
/// rooted traversal, verified against the definition; exhaustive permutation
/// fallback for families of at most 8 sets. Members must be nonempty.
std::optional<RunningIntersectionOrdering> rip_ordering(
    const std::vector<std::vector<NodeId>>& family);

/// Cut centered at e_0 with neighbor edges e_k whose intersections with e_0
/// admit a running-intersection ordering. `neighbors` is stored in that
/// ordering; w[k] is the per-neighbor witness: empty exactly when the k-th
/// N-set is empty, otherwise a node of it or an edge inside it.
struct EriSpec {
  Edge center;
  std::vector<Edge> neighbors;
  RunningIntersectionOrdering ordering;  // over the intersections e_0 n e_k
  std::vector<std::optional<VariableId>> w;
};

/// - sum_k z_{w_k} + sum_{v in e_0 \ U e_k} z_v + sum_k z_{e_k} - z_{e_0}
///   <= omega - 1,  omega = |e_0 \ U e_k| + #{k : N_k empty}.
/// Checks the witness slots (InvalidW) and asserts coefficient sum == rhs.
LinearInequality eri_inequality(const EriSpec& spec, const Hypergraph& g);

/// Keep/drop decision. Drops the spec when any of: (i) one neighbor
/// intersection contained in another, (ii) an intersection of cardinality
/// <= 1, (iii) two different witnesses both inside the same pair of N-sets,
/// (iv) a witness strictly below an edge of g inside its N-set.
bool redundancy_filter(const EriSpec& spec, const Hypergraph& g);

struct EriLimits {
  int max_neighbors = 3;
  int max_center_card = -1;  // -1: rank of the hypergraph
};

/// All cuts over g within the limits, filtered by redundancy_filter unless
/// `filtered` is false, deduplicated canonically.
std::vector<LinearInequality> enumerate_eri(const Hypergraph& g,
                                            const EriLimits& limits = {},
                                            bool filtered = true);

/// Spec-level variant for callers that need the generating data.
std::vector<EriSpec> enumerate_eri_specs(const Hypergraph& g,
                                         const EriLimits& limits = {},
                                         bool filtered = true);

/// Path-of-blocks family (n >= 2) whose hull needs a facet with |E| nonzero
/// coefficients: returns the hypergraph and that facet,
///   -sum_i z_{V^i} - sum_{H} z_e + sum_i sum_{E^i minus V^i} z_e <= 2n-3.
/// Node v^i_j is encoded as id 10*i + j.
std::pair<Hypergraph, LinearInequality> dense_facet_family(int n);

}  // namespace multipoly

#endif
