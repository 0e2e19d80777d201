#include "multipoly/cuts.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace multipoly {

namespace {

std::vector<NodeId> intersect_sorted(const std::vector<NodeId>& a,
                                     const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_sorted(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<NodeId>> n_sets_for(const std::vector<std::vector<NodeId>>& ordered) {
  std::vector<std::vector<NodeId>> n_sets(ordered.size());
  std::vector<NodeId> seen;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    if (k > 0) n_sets[k] = intersect_sorted(ordered[k], seen);
    std::vector<NodeId> merged;
    std::set_union(seen.begin(), seen.end(), ordered[k].begin(), ordered[k].end(),
                   std::back_inserter(merged));
    seen = std::move(merged);
  }
  return n_sets;
}

bool verify_rip(const std::vector<std::vector<NodeId>>& ordered,
                const std::vector<std::vector<NodeId>>& n_sets) {
  for (std::size_t k = 1; k < ordered.size(); ++k) {
    bool housed = false;
    for (std::size_t j = 0; j < k && !housed; ++j)
      housed = subset_sorted(n_sets[k], ordered[j]);
    if (!housed) return false;
  }
  return true;
}

// Maximum-weight spanning tree on pairwise intersection sizes, then a rooted
// breadth-first order. For a family with the running-intersection property
// this is the classical join-tree construction; the verification step guards
// the cases where no ordering exists at all.
std::optional<std::vector<std::size_t>> rip_permutation(
    const std::vector<std::vector<NodeId>>& family) {
  const std::size_t m = family.size();
  if (m == 0) return std::nullopt;
  if (m == 1) return std::vector<std::size_t>{0};

  struct TreeEdge {
    std::size_t weight, a, b;
  };
  std::vector<TreeEdge> candidates;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      candidates.push_back({intersect_sorted(family[i], family[j]).size(), i, j});
  std::sort(candidates.begin(), candidates.end(), [](const TreeEdge& x, const TreeEdge& y) {
    if (x.weight != y.weight) return x.weight > y.weight;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<std::size_t>> adjacency(m);
  for (const TreeEdge& e : candidates) {
    std::size_t ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  for (auto& adj : adjacency) std::sort(adj.begin(), adj.end());

  std::vector<std::size_t> order;
  std::vector<char> visited(m, 0);
  std::vector<std::size_t> queue{0};
  visited[0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.erase(queue.begin());
    order.push_back(v);
    for (std::size_t w : adjacency[v])
      if (!visited[w]) {
        visited[w] = 1;
        queue.push_back(w);
      }
  }

  std::vector<std::vector<NodeId>> ordered;
  for (std::size_t idx : order) ordered.push_back(family[idx]);
  if (verify_rip(ordered, n_sets_for(ordered))) return order;

  if (m > 8) return std::nullopt;  // exhaustive fallback is gated
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ordered.clear();
    for (std::size_t idx : perm) ordered.push_back(family[idx]);
    if (verify_rip(ordered, n_sets_for(ordered))) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<NodeId> witness_nodes(const std::optional<VariableId>& w) {
  if (!w) return {};
  if (w->is_node()) return {w->node_id()};
  return w->edge_ref().nodes();
}

}  // namespace

std::optional<RunningIntersectionOrdering> rip_ordering(
    const std::vector<std::vector<NodeId>>& family) {
  if (family.empty()) throw BadParameter("empty set family");
  std::vector<std::vector<NodeId>> sorted_family;
  for (const auto& member : family) {
    if (member.empty()) throw BadParameter("set family members must be nonempty");
    std::vector<NodeId> s = member;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sorted_family.push_back(std::move(s));
  }
  auto perm = rip_permutation(sorted_family);
  if (!perm) return std::nullopt;
  RunningIntersectionOrdering ordering;
  for (std::size_t idx : *perm) ordering.sets.push_back(sorted_family[idx]);
  ordering.n_sets = n_sets_for(ordering.sets);
  return ordering;
}

LinearInequality eri_inequality(const EriSpec& spec, const Hypergraph& g) {
  if (!g.has_edge(spec.center)) throw BadParameter("center is not an edge of the hypergraph");
  if (spec.neighbors.empty()) throw BadParameter("a cut needs at least one neighbor");
  if (spec.w.size() != spec.neighbors.size() ||
      spec.ordering.sets.size() != spec.neighbors.size())
    throw BadParameter("misaligned neighbor/witness/ordering lists");

  const std::size_t k_count = spec.neighbors.size();
  for (std::size_t k = 0; k < k_count; ++k) {
    const Edge& ek = spec.neighbors[k];
    if (!g.has_edge(ek)) throw BadParameter("neighbor is not an edge of the hypergraph");
    if (ek == spec.center) throw BadParameter("a neighbor may not equal the center");
    std::vector<NodeId> expected =
        intersect_sorted(spec.center.nodes(), ek.nodes());
    if (expected.empty()) throw BadParameter("neighbor does not meet the center");
    if (expected != spec.ordering.sets[k])
      throw BadParameter("ordering does not list the center intersections in order");
  }
  if (!verify_rip(spec.ordering.sets, spec.ordering.n_sets) ||
      spec.ordering.n_sets != n_sets_for(spec.ordering.sets))
    throw BadParameter("ordering lacks the running-intersection property");

  long omega = 0;
  std::map<VariableId, Rational> coeffs;

  for (std::size_t k = 0; k < k_count; ++k) {
    const auto& n_set = spec.ordering.n_sets[k];
    const auto& w = spec.w[k];
    if (n_set.empty()) {
      if (w) throw InvalidW("the witness must be empty where the N-set is empty");
      ++omega;
      continue;
    }
    if (!w) throw InvalidW("a nonempty N-set needs a node or edge witness");
    std::vector<NodeId> wn = witness_nodes(w);
    if (!subset_sorted(wn, n_set))
      throw InvalidW("witness is not contained in its N-set");
    if (w->is_edge() && !g.has_edge(w->edge_ref()))
      throw InvalidW("edge witness is not an edge of the hypergraph");
    coeffs[*w] -= 1;
  }

  std::vector<NodeId> covered;
  for (const Edge& ek : spec.neighbors) {
    std::vector<NodeId> merged;
    std::set_union(covered.begin(), covered.end(), ek.nodes().begin(), ek.nodes().end(),
                   std::back_inserter(merged));
    covered = std::move(merged);
  }
  for (NodeId v : spec.center.nodes())
    if (!std::binary_search(covered.begin(), covered.end(), v)) {
      coeffs[VariableId::node(v)] += 1;
      ++omega;
    }

  for (const Edge& ek : spec.neighbors) coeffs[VariableId::edge(ek)] += 1;
  coeffs[VariableId::edge(spec.center)] -= 1;

  LinearInequality row(std::move(coeffs), Rational(omega - 1), "eri");
  if (row.coefficient_sum() != row.rhs)
    throw std::logic_error("cut violates the coefficient-sum law");
  return row;
}

bool redundancy_filter(const EriSpec& spec, const Hypergraph& g) {
  const std::size_t k_count = spec.neighbors.size();
  const auto& sets = spec.ordering.sets;
  const auto& n_sets = spec.ordering.n_sets;

  for (std::size_t k = 0; k < k_count; ++k) {
    if (sets[k].size() <= 1) return false;  // (ii)
    for (std::size_t k2 = 0; k2 < k_count; ++k2)
      if (k != k2 && subset_sorted(sets[k], sets[k2])) return false;  // (i)
  }

  for (std::size_t k = 0; k < k_count; ++k)
    for (std::size_t k2 = k + 1; k2 < k_count; ++k2) {
      if (spec.w[k] == spec.w[k2]) continue;
      std::vector<NodeId> common = intersect_sorted(n_sets[k], n_sets[k2]);
      if (subset_sorted(witness_nodes(spec.w[k]), common) &&
          subset_sorted(witness_nodes(spec.w[k2]), common))
        return false;  // (iii)
    }

  for (std::size_t k = 0; k < k_count; ++k) {
    std::vector<NodeId> wn = witness_nodes(spec.w[k]);
    for (const Edge& p : g.edges()) {
      if (!subset_sorted(p.nodes(), n_sets[k])) continue;
      if (wn.size() < p.size() && subset_sorted(wn, p.nodes())) return false;  // (iv)
    }
  }
  return true;
}

std::vector<EriSpec> enumerate_eri_specs(const Hypergraph& g, const EriLimits& limits,
                                         bool filtered) {
  const int max_center =
      limits.max_center_card < 0 ? rank(g) : limits.max_center_card;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<EriSpec> result;

  for (const Edge& center : edges) {
    if (static_cast<int>(center.size()) > max_center) continue;
    std::vector<Edge> candidates;
    for (const Edge& e : edges)
      if (!(e == center) && !intersect_sorted(center.nodes(), e.nodes()).empty())
        candidates.push_back(e);

    const std::size_t max_k =
        std::min<std::size_t>(candidates.size(), std::max(limits.max_neighbors, 0));
    std::vector<std::size_t> combo;
    auto explore = [&](auto&& self, std::size_t start) -> void {
      if (!combo.empty()) {
        std::vector<std::vector<NodeId>> family;
        std::vector<Edge> neighbors;
        for (std::size_t idx : combo) {
          neighbors.push_back(candidates[idx]);
          family.push_back(intersect_sorted(center.nodes(), candidates[idx].nodes()));
        }
        if (auto perm = rip_permutation(family)) {
          EriSpec spec{center, {}, {}, {}};
          for (std::size_t idx : *perm) {
            spec.neighbors.push_back(neighbors[idx]);
            spec.ordering.sets.push_back(family[idx]);
          }
          spec.ordering.n_sets = n_sets_for(spec.ordering.sets);

          // witness slots: forced empty on an empty N-set, otherwise each
          // node of the N-set and each edge of g inside it
          std::vector<std::vector<std::optional<VariableId>>> slots;
          for (const auto& n_set : spec.ordering.n_sets) {
            std::vector<std::optional<VariableId>> options;
            if (n_set.empty()) {
              options.push_back(std::nullopt);
            } else {
              for (NodeId v : n_set) options.push_back(VariableId::node(v));
              for (const Edge& p : g.edges())
                if (subset_sorted(p.nodes(), n_set))
                  options.push_back(VariableId::edge(p));
            }
            slots.push_back(std::move(options));
          }

          std::vector<std::size_t> choice(slots.size(), 0);
          for (;;) {
            spec.w.clear();
            for (std::size_t k = 0; k < slots.size(); ++k)
              spec.w.push_back(slots[k][choice[k]]);
            if (!filtered || redundancy_filter(spec, g)) result.push_back(spec);
            std::size_t k = 0;
            while (k < slots.size() && ++choice[k] == slots[k].size()) choice[k++] = 0;
            if (k == slots.size()) break;
          }
        }
      }
      if (combo.size() == max_k) return;
      for (std::size_t next = start; next < candidates.size(); ++next) {
        combo.push_back(next);
        self(self, next + 1);
        combo.pop_back();
      }
    };
    explore(explore, 0);
  }
  return result;
}

std::vector<LinearInequality> enumerate_eri(const Hypergraph& g, const EriLimits& limits,
                                            bool filtered) {
  std::vector<LinearInequality> rows;
  std::set<std::string> seen;
  for (const EriSpec& spec : enumerate_eri_specs(g, limits, filtered)) {
    LinearInequality row = eri_inequality(spec, g);
    if (seen.insert(row.canonical_key()).second) rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<Hypergraph, LinearInequality> dense_facet_family(int n) {
  if (n < 2) throw BadParameter("the dense family needs n >= 2");
  auto id = [](int block, int j) { return static_cast<NodeId>(10 * block + j); };

  std::set<NodeId> nodes;
  std::vector<Edge> block_edges;   // the E^i \ {V^i} edges, +1 coefficients
  std::vector<Edge> block_hulls;   // the V^i edges, -1
  std::vector<Edge> links;         // the H edges, -1

  for (int i = 1; i <= n; ++i) {
    std::vector<int> members;
    if (i == 1)
      members = {3, 4, 7, 8};
    else if (i == n)
      members = {1, 2, 5, 6};
    else
      members = {1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<NodeId> hull;
    for (int j : members) {
      nodes.insert(id(i, j));
      hull.push_back(id(i, j));
    }
    block_hulls.emplace_back(hull);

    if (i > 1) {
      block_edges.emplace_back(std::vector<NodeId>{id(i, 1), id(i, 2), id(i, 5)});
      block_edges.emplace_back(std::vector<NodeId>{id(i, 1), id(i, 2), id(i, 6)});
    }
    if (i < n) {
      block_edges.emplace_back(std::vector<NodeId>{id(i, 3), id(i, 4), id(i, 7)});
      block_edges.emplace_back(std::vector<NodeId>{id(i, 3), id(i, 4), id(i, 8)});
      links.emplace_back(std::vector<NodeId>{id(i, 3), id(i, 4), id(i + 1, 1), id(i + 1, 2)});
    }
  }

  std::set<Edge> edges;
  for (const Edge& e : block_edges) edges.insert(e);
  for (const Edge& e : block_hulls) edges.insert(e);
  for (const Edge& e : links) edges.insert(e);
  Hypergraph g(std::move(nodes), std::move(edges));

  std::map<VariableId, Rational> coeffs;
  for (const Edge& e : block_edges) coeffs[VariableId::edge(e)] = 1;
  for (const Edge& e : block_hulls) coeffs[VariableId::edge(e)] = -1;
  for (const Edge& e : links) coeffs[VariableId::edge(e)] = -1;
  LinearInequality facet(std::move(coeffs), Rational(2 * n - 3), "dense");
  return {std::move(g), std::move(facet)};
}

}  // namespace multipoly
