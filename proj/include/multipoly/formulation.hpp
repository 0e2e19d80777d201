#ifndef MULTIPOLY_FORMULATION_HPP
#define MULTIPOLY_FORMULATION_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "multipoly/expansion.hpp"
#include "multipoly/system.hpp"

namespace multipoly {

/// The input hypergraph was expected to be beta-acyclic; carries the residual
/// left over by greedy nest-point elimination.
class NotBetaAcyclic : public std::runtime_error {
 public:
  explicit NotBetaAcyclic(Hypergraph residual)
      : std::runtime_error("hypergraph is not beta-acyclic"),
        residual_(std::move(residual)) {}
  const Hypergraph& residual() const { return residual_; }

 private:
  Hypergraph residual_;
};

/// Per-edge McCormick relaxation: z_v <= 1, z_e >= 0,
/// z_e >= sum_{v in e} z_v - |e| + 1 and z_e <= z_v for v in e.
/// Node lower bounds are implied on every edge-covered node and are not
/// emitted as rows.
InequalitySystem standard_linearization(const Hypergraph& g);

/// Exact convex hull for a hypergraph whose edges through `v` form the chain
/// e_1 c e_2 c ... c e_k covering the whole node set, together with the
/// residues e_i \ {v}. The chain must be passed sorted; NotAChain otherwise.
InequalitySystem pointed_system(const std::vector<Edge>& chain, NodeId v);

/// Extended formulation of the multilinear polytope over the variables of the
/// expansion. original_vars covers V and E; extended_vars is E' \ E.
struct ExtendedFormulation {
  InequalitySystem system;
  std::set<VariableId> original_vars;
  std::set<VariableId> extended_vars;
  ExpandedHypergraph source;
};

/// Builds the full extended formulation for a beta-acyclic hypergraph. Uses
/// the greedy smallest-id nest-point order unless `order` is supplied
/// (the rows depend on it; any full nest-point order works). Size guarantees
/// for a nonempty edge set with rank r:
///   rows <= (3r-4)|V| + 4|E|,   extended variables <= (r-2)|V|,
///   |E'| <= (r-2)|V| + |E|;
/// all three are asserted at construction.
ExtendedFormulation beta_acyclic_formulation(
    const Hypergraph& g, std::optional<std::vector<NodeId>> order = std::nullopt);

/// Peels the first s nodes of a (not necessarily beta-acyclic) hypergraph:
/// expands g along `order`, emits the chain convex hull at each removed node
/// (verbatim, including rows a later cleanup could prove redundant) and
/// returns the residual hypergraph whose description the caller must supply.
/// Isolated removal steps contribute their 0 <= z <= 1 rows.
std::pair<InequalitySystem, Hypergraph> partial_formulation(
    const Hypergraph& g, const std::vector<NodeId>& order);

}  // namespace multipoly

#endif
