#ifndef MULTIPOLY_ORACLE_HPP
#define MULTIPOLY_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "multipoly/hypergraph.hpp"
#include "multipoly/system.hpp"

namespace multipoly {

/// One binary assignment with every edge value equal to the product of its
/// node values.
struct MultilinearPoint {
  std::map<VariableId, int> assignment;
};

inline constexpr int kEnumerationNodeLimit = 24;

/// All 2^|V| points of the multilinear set. Throws SizeLimitExceeded past
/// the node limit.
std::vector<MultilinearPoint> enumerate_points(const Hypergraph& g);

/// Exact maximum of a linear objective over the multilinear set, by
/// enumeration. Ties resolve to the lexicographically smallest node
/// assignment (node ids ascending).
std::pair<Rational, MultilinearPoint> brute_force_max(const Hypergraph& g,
                                                      const Objective& objective);

struct ValidityReport {
  bool valid = false;
  std::optional<MultilinearPoint> violator;
};

/// Does a.z <= b hold at every point of the multilinear set? The inequality
/// may only mention nodes and edges of g.
ValidityReport check_validity(const Hypergraph& g, const LinearInequality& ineq);

struct FacetReport {
  bool valid = false;
  std::int64_t tight_count = 0;
  int tight_rank = 0;  // affinely independent tight points
  bool is_facet = false;
};

/// Facet certificate by enumeration: collects the tight points and computes
/// their affine rank over exact rationals. is_facet iff valid and the rank
/// equals |V|+|E| (the hull is full-dimensional in that dimension). The rank
/// step is gated at |V|+|E| <= 20.
FacetReport check_facet(const Hypergraph& g, const LinearInequality& ineq);

/// Affine rank of 0/1 points given as assignment rows; exact, fraction-free.
int affine_rank(const std::vector<std::vector<int>>& points);

/// Certifies that splitting g at nest point v (chain part vs g - v) loses
/// nothing: sweeps `trials` seeded integer objectives plus all +-unit
/// directions and compares the brute-force maximum over g with the LP
/// maximum over the concatenated descriptions of the two parts. Requires
/// every residue e \ {v} of cardinality >= 2 to be an edge of g
/// (HypothesisViolated otherwise).
bool check_decomposition(const Hypergraph& g, NodeId v, int trials = 50,
                         std::uint64_t seed = 0);

/// Sum of coefficients equals the right-hand side, exactly. Callers must not
/// pass nonnegativity rows (the one shape exempt from the law).
bool check_coefficient_sum(const LinearInequality& ineq);

/// Reusable enumerator: precomputes per-assignment edge activity so that
/// many objectives against one hypergraph stay cheap.
class SetEnumerator {
 public:
  explicit SetEnumerator(const Hypergraph& g);

  const Hypergraph& hypergraph() const { return g_; }
  std::uint64_t num_points() const { return std::uint64_t(1) << node_order_.size(); }

  /// Objective split into node and edge coefficient vectors aligned with
  /// node/edge iteration order of the hypergraph.
  std::pair<Rational, std::uint64_t> max_mask(const std::vector<Rational>& node_coeffs,
                                              const std::vector<Rational>& edge_coeffs) const;

  std::pair<Rational, MultilinearPoint> maximize(const Objective& objective) const;

  ValidityReport validity(const LinearInequality& ineq) const;

  MultilinearPoint point_from_mask(std::uint64_t mask) const;

  const std::vector<NodeId>& node_order() const { return node_order_; }
  const std::vector<Edge>& edge_order() const { return edge_order_; }

 private:
  Hypergraph g_;
  std::vector<NodeId> node_order_;
  std::vector<Edge> edge_order_;
  std::vector<std::uint64_t> edge_masks_;  // node-bits per edge
};

}  // namespace multipoly

#endif
