#include "multipoly/formulation.hpp"

#include <algorithm>
#include <cassert>

namespace multipoly {

namespace {

// Accumulating sparse row; entries that cancel to zero vanish.
class RowBuilder {
 public:
  explicit RowBuilder(std::string tag) : tag_(std::move(tag)) {}

  RowBuilder& add(const VariableId& v, Rational c) {
    auto [it, inserted] = coeffs_.emplace(v, c);
    if (!inserted) it->second += c;
    return *this;
  }
  RowBuilder& rhs(Rational b) {
    rhs_ = std::move(b);
    return *this;
  }

  LinearInequality build() && {
    return LinearInequality(std::move(coeffs_), std::move(rhs_), std::move(tag_));
  }

 private:
  std::map<VariableId, Rational> coeffs_;
  Rational rhs_{0};
  std::string tag_;
};

// Rows that collapse to 0 <= b with b >= 0 (singleton residues cancel against
// their own node variable) carry no information.
void add_if_nontrivial(InequalitySystem& system, LinearInequality row) {
  if (row.coeffs.empty() && row.rhs >= 0) return;
  system.add_row(std::move(row));
}

VariableId var_without(const Edge& e, NodeId v) {
  std::vector<NodeId> rest;
  rest.reserve(e.size() - 1);
  for (NodeId u : e.nodes())
    if (u != v) rest.push_back(u);
  return VariableId::for_set(rest);
}

}  // namespace

InequalitySystem standard_linearization(const Hypergraph& g) {
  InequalitySystem system;
  for (NodeId v : g.nodes()) system.add_variable(VariableId::node(v));
  for (const Edge& e : g.edges()) system.add_variable(VariableId::edge(e));

  for (NodeId v : g.nodes())
    system.add_row(RowBuilder("std.ub").add(VariableId::node(v), 1).rhs(1).build());

  for (const Edge& e : g.edges()) {
    VariableId ze = VariableId::edge(e);
    system.add_row(RowBuilder("std.nonneg").add(ze, -1).rhs(0).build());

    RowBuilder cover("std.cover");
    for (NodeId v : e.nodes()) cover.add(VariableId::node(v), 1);
    cover.add(ze, -1).rhs(Rational(static_cast<long>(e.size()) - 1));
    system.add_row(std::move(cover).build());

    for (NodeId v : e.nodes())
      system.add_row(
          RowBuilder("std.proj").add(ze, 1).add(VariableId::node(v), -1).rhs(0).build());
  }
  return system;
}

InequalitySystem pointed_system(const std::vector<Edge>& chain, NodeId v) {
  if (chain.empty()) throw NotAChain("empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].contains(v))
      throw NotAChain("edge " + chain[i].to_string() + " does not contain the point");
    if (i + 1 < chain.size() && !chain[i].strict_subset_of(chain[i + 1]))
      throw NotAChain(chain[i].to_string() + " is not strictly inside " +
                      chain[i + 1].to_string());
  }

  const std::size_t k = chain.size();
  const Edge& top = chain.back();

  InequalitySystem system;
  for (NodeId u : top.nodes()) system.add_variable(VariableId::node(u));
  std::vector<VariableId> e_var, p_var;
  for (const Edge& e : chain) {
    e_var.push_back(VariableId::edge(e));
    system.add_variable(e_var.back());
    p_var.push_back(var_without(e, v));
    system.add_variable(p_var.back());
  }

  for (NodeId u : top.nodes())
    system.add_row(RowBuilder("hull.ub").add(VariableId::node(u), 1).rhs(1).build());

  system.add_row(RowBuilder("hull.nonneg").add(e_var[k - 1], -1).rhs(0).build());
  system.add_row(
      RowBuilder("hull.top").add(e_var[k - 1], 1).add(p_var[k - 1], -1).rhs(0).build());

  for (std::size_t i = 0; i + 1 < k; ++i) {
    system.add_row(
        RowBuilder("hull.mono").add(e_var[i + 1], 1).add(e_var[i], -1).rhs(0).build());
    system.add_row(RowBuilder("hull.exch")
                       .add(p_var[i], -1)
                       .add(p_var[i + 1], 1)
                       .add(e_var[i], 1)
                       .add(e_var[i + 1], -1)
                       .rhs(0)
                       .build());

    std::vector<NodeId> fresh;  // e_{i+1} \ e_i
    std::set_difference(chain[i + 1].nodes().begin(), chain[i + 1].nodes().end(),
                        chain[i].nodes().begin(), chain[i].nodes().end(),
                        std::back_inserter(fresh));
    for (NodeId u : fresh)
      add_if_nontrivial(system, RowBuilder("hull.proj")
                                    .add(p_var[i + 1], 1)
                                    .add(VariableId::node(u), -1)
                                    .rhs(0)
                                    .build());
    RowBuilder cover("hull.cover");
    for (NodeId u : fresh) cover.add(VariableId::node(u), 1);
    cover.add(p_var[i], 1).add(p_var[i + 1], -1);
    cover.rhs(Rational(static_cast<long>(fresh.size())));
    add_if_nontrivial(system, std::move(cover).build());
  }

  system.add_row(
      RowBuilder("hull.apex").add(e_var[0], 1).add(VariableId::node(v), -1).rhs(0).build());
  system.add_row(RowBuilder("hull.apex_cover")
                     .add(VariableId::node(v), 1)
                     .add(p_var[0], 1)
                     .add(e_var[0], -1)
                     .rhs(1)
                     .build());

  std::vector<NodeId> base;  // p_1
  for (NodeId u : chain[0].nodes())
    if (u != v) base.push_back(u);
  for (NodeId u : base)
    add_if_nontrivial(system, RowBuilder("hull.base_proj")
                                  .add(p_var[0], 1)
                                  .add(VariableId::node(u), -1)
                                  .rhs(0)
                                  .build());
  RowBuilder base_cover("hull.base_cover");
  for (NodeId u : base) base_cover.add(VariableId::node(u), 1);
  base_cover.add(p_var[0], -1).rhs(Rational(static_cast<long>(base.size()) - 1));
  add_if_nontrivial(system, std::move(base_cover).build());

  return system;
}

ExtendedFormulation beta_acyclic_formulation(const Hypergraph& g,
                                             std::optional<std::vector<NodeId>> order) {
  std::vector<NodeId> sequence;
  if (order) {
    if (order->size() != g.nodes().size())
      throw BadParameter("order must list every node exactly once");
    sequence = *order;
  } else {
    NestPointSequence greedy = nest_point_sequence(g);
    if (!greedy.residual.empty()) throw NotBetaAcyclic(greedy.residual);
    sequence = std::move(greedy.order);
  }

  ExtendedFormulation result;
  result.source = expand(g, sequence);  // NotANestPointSequence for a bad caller order
  const Hypergraph& expanded = result.source.expanded;
  auto table = edge_structure(result.source);

  InequalitySystem& system = result.system;
  for (NodeId u : g.nodes()) system.add_variable(VariableId::node(u));
  for (const Edge& e : expanded.edges()) system.add_variable(VariableId::edge(e));

  for (NodeId u : g.nodes()) {
    system.add_row(RowBuilder("r1").add(VariableId::node(u), 1).rhs(1).build());
    system.add_row(RowBuilder("r1").add(VariableId::node(u), -1).rhs(0).build());
  }
  for (const Edge& e : maximal_edges(expanded))
    system.add_row(RowBuilder("r2").add(VariableId::edge(e), -1).rhs(0).build());

  for (const Edge& e : expanded.edges()) {
    const EdgeStructure& st = table.at(e);
    VariableId ze = VariableId::edge(e);
    system.add_row(RowBuilder("r3").add(ze, 1).add(st.p_of_e, -1).rhs(0).build());
    if (st.in_M) {
      VariableId zf = VariableId::edge(*st.f_of_e);
      system.add_row(RowBuilder("r4").add(ze, 1).add(zf, -1).rhs(0).build());
      system.add_row(RowBuilder("r5")
                         .add(*st.f_prime, -1)
                         .add(st.p_of_e, 1)
                         .add(zf, 1)
                         .add(ze, -1)
                         .rhs(0)
                         .build());
    } else {
      system.add_row(RowBuilder("r6")
                         .add(VariableId::node(st.v_of_e), 1)
                         .add(st.p_of_e, 1)
                         .add(ze, -1)
                         .rhs(1)
                         .build());
      system.add_row(
          RowBuilder("r7").add(ze, 1).add(VariableId::node(st.v_of_e), -1).rhs(0).build());
    }
  }

  for (NodeId u : g.nodes()) result.original_vars.insert(VariableId::node(u));
  for (const Edge& e : g.edges()) result.original_vars.insert(VariableId::edge(e));
  for (const Edge& e : result.source.added)
    result.extended_vars.insert(VariableId::edge(e));

  if (!g.edges().empty()) {
    const long r = rank(g);
    const long nv = static_cast<long>(g.nodes().size());
    const long ne = static_cast<long>(g.edges().size());
    if (static_cast<long>(result.extended_vars.size()) > (r - 2) * nv)
      throw std::logic_error("extended variable bound violated");
    if (static_cast<long>(system.size()) > (3 * r - 4) * nv + 4 * ne)
      throw std::logic_error("row count bound violated");
    if (static_cast<long>(expanded.edges().size()) > (r - 2) * nv + ne)
      throw std::logic_error("expansion size bound violated");
  }
  return result;
}

std::pair<InequalitySystem, Hypergraph> partial_formulation(
    const Hypergraph& g, const std::vector<NodeId>& order) {
  ExpandedHypergraph x = expand(g, order);

  InequalitySystem system;
  for (NodeId u : g.nodes()) system.add_variable(VariableId::node(u));
  for (const Edge& e : x.expanded.edges()) system.add_variable(VariableId::edge(e));

  Hypergraph current = x.expanded;
  for (NodeId v : order) {
    std::vector<Edge> chain = current.edges_containing(v);
    std::sort(chain.begin(), chain.end(), [](const Edge& a, const Edge& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    if (chain.empty()) {
      system.add_row(RowBuilder("hull.ub").add(VariableId::node(v), 1).rhs(1).build());
      system.add_row(RowBuilder("hull.lb").add(VariableId::node(v), -1).rhs(0).build());
    } else {
      system.merge(pointed_system(chain, v));
    }
    current = remove_node(current, v);
  }

  // Peeling the expansion leaves the same residual as peeling the input.
  assert([&] {
    Hypergraph plain = g;
    for (NodeId v : order) plain = remove_node(plain, v);
    return plain == current;
  }());
  return {std::move(system), std::move(current)};
}

}  // namespace multipoly
