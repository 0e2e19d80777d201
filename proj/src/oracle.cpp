#include "multipoly/oracle.hpp"

#include <algorithm>
#include <random>

#include "multipoly/acyclicity.hpp"
#include "multipoly/formulation.hpp"
#include "multipoly/simplex.hpp"

namespace multipoly {

namespace {

// Deterministic across standard library implementations, unlike
// uniform_int_distribution. Bias at this range is irrelevant for sweeps.
long draw_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

bool lex_less(std::uint64_t a, std::uint64_t b) {
  // assignment vectors ordered by ascending node id, bit 0 first
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  return (a & low) == 0;
}

}  // namespace

SetEnumerator::SetEnumerator(const Hypergraph& g) : g_(g) {
  if (g.nodes().size() > kEnumerationNodeLimit)
    throw SizeLimitExceeded("enumeration is gated at " +
                            std::to_string(kEnumerationNodeLimit) + " nodes");
  node_order_.assign(g.nodes().begin(), g.nodes().end());
  edge_order_.assign(g.edges().begin(), g.edges().end());
  std::map<NodeId, int> position;
  for (std::size_t i = 0; i < node_order_.size(); ++i)
    position[node_order_[i]] = static_cast<int>(i);
  for (const Edge& e : edge_order_) {
    std::uint64_t mask = 0;
    for (NodeId v : e.nodes()) mask |= std::uint64_t(1) << position.at(v);
    edge_masks_.push_back(mask);
  }
}

std::pair<Rational, std::uint64_t> SetEnumerator::max_mask(
    const std::vector<Rational>& node_coeffs,
    const std::vector<Rational>& edge_coeffs) const {
  const std::size_t n = node_order_.size();
  const std::uint64_t total = std::uint64_t(1) << n;

  // Small integer objectives take a word-size path; exact either way.
  bool small = true;
  long long bound = 0;
  for (const Rational& q : node_coeffs) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) small = false;
    else bound += std::abs(q.get_num().get_si());
  }
  for (const Rational& q : edge_coeffs) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) small = false;
    else bound += std::abs(q.get_num().get_si());
  }
  if (small && bound < (1LL << 60)) {
    std::vector<long long> nc, ec;
    for (const Rational& q : node_coeffs) nc.push_back(q.get_num().get_si());
    for (const Rational& q : edge_coeffs) ec.push_back(q.get_num().get_si());
    long long best = 0;
    std::uint64_t best_mask = 0;
    bool have = false;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      long long value = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) value += nc[i];
      for (std::size_t j = 0; j < edge_masks_.size(); ++j)
        if ((mask & edge_masks_[j]) == edge_masks_[j]) value += ec[j];
      if (!have || value > best || (value == best && lex_less(mask, best_mask))) {
        have = true;
        best = value;
        best_mask = mask;
      }
    }
    return {Rational(static_cast<long>(best)), best_mask};
  }

  Rational best(0);
  std::uint64_t best_mask = 0;
  bool have = false;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Rational value(0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) value += node_coeffs[i];
    for (std::size_t j = 0; j < edge_masks_.size(); ++j)
      if ((mask & edge_masks_[j]) == edge_masks_[j]) value += edge_coeffs[j];
    if (!have || value > best || (value == best && lex_less(mask, best_mask))) {
      have = true;
      best = value;
      best_mask = mask;
    }
  }
  return {best, best_mask};
}

MultilinearPoint SetEnumerator::point_from_mask(std::uint64_t mask) const {
  MultilinearPoint point;
  for (std::size_t i = 0; i < node_order_.size(); ++i)
    point.assignment[VariableId::node(node_order_[i])] = (mask >> i) & 1;
  for (std::size_t j = 0; j < edge_order_.size(); ++j)
    point.assignment[VariableId::edge(edge_order_[j])] =
        (mask & edge_masks_[j]) == edge_masks_[j] ? 1 : 0;
  return point;
}

namespace {

// Splits a map keyed by variables into node/edge coefficient vectors aligned
// with the enumerator's iteration order.
void split_coeffs(const SetEnumerator& en, const std::map<VariableId, Rational>& coeffs,
                  std::vector<Rational>& node_out, std::vector<Rational>& edge_out) {
  node_out.assign(en.node_order().size(), Rational(0));
  edge_out.assign(en.edge_order().size(), Rational(0));
  std::map<VariableId, std::size_t> index;
  for (std::size_t i = 0; i < en.node_order().size(); ++i)
    index[VariableId::node(en.node_order()[i])] = i;
  for (std::size_t j = 0; j < en.edge_order().size(); ++j)
    index[VariableId::edge(en.edge_order()[j])] = en.node_order().size() + j;
  for (const auto& [v, c] : coeffs) {
    auto it = index.find(v);
    if (it == index.end())
      throw std::invalid_argument("variable " + v.name() +
                                  " is not a node or edge of the hypergraph");
    if (it->second < en.node_order().size())
      node_out[it->second] = c;
    else
      edge_out[it->second - en.node_order().size()] = c;
  }
}

}  // namespace

std::pair<Rational, MultilinearPoint> SetEnumerator::maximize(
    const Objective& objective) const {
  std::vector<Rational> nc, ec;
  split_coeffs(*this, objective, nc, ec);
  auto [value, mask] = max_mask(nc, ec);
  return {value, point_from_mask(mask)};
}

ValidityReport SetEnumerator::validity(const LinearInequality& ineq) const {
  std::vector<Rational> nc, ec;
  split_coeffs(*this, ineq.coeffs, nc, ec);
  auto [value, mask] = max_mask(nc, ec);
  ValidityReport report;
  report.valid = value <= ineq.rhs;
  if (!report.valid) report.violator = point_from_mask(mask);
  return report;
}

std::vector<MultilinearPoint> enumerate_points(const Hypergraph& g) {
  SetEnumerator en(g);
  std::vector<MultilinearPoint> points;
  points.reserve(en.num_points());
  for (std::uint64_t mask = 0; mask < en.num_points(); ++mask)
    points.push_back(en.point_from_mask(mask));
  return points;
}

std::pair<Rational, MultilinearPoint> brute_force_max(const Hypergraph& g,
                                                      const Objective& objective) {
  return SetEnumerator(g).maximize(objective);
}

ValidityReport check_validity(const Hypergraph& g, const LinearInequality& ineq) {
  return SetEnumerator(g).validity(ineq);
}

int affine_rank(const std::vector<std::vector<int>>& points) {
  if (points.empty()) return 0;
  const std::size_t cols = points.front().size();
  // Differences against the first point, reduced incrementally to echelon
  // form over exact integers.
  std::vector<std::vector<BigInt>> echelon;   // pivot rows
  std::vector<std::size_t> pivot_col;
  for (std::size_t p = 1; p < points.size(); ++p) {
    std::vector<BigInt> row(cols);
    for (std::size_t j = 0; j < cols; ++j)
      row[j] = BigInt(points[p][j] - points[0][j]);
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const std::size_t pc = pivot_col[r];
      if (row[pc] == 0) continue;
      BigInt a = echelon[r][pc], b = row[pc];
      for (std::size_t j = 0; j < cols; ++j) row[j] = row[j] * a - echelon[r][j] * b;
      BigInt g(0);
      for (std::size_t j = 0; j < cols; ++j)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
      if (g > 1)
        for (std::size_t j = 0; j < cols; ++j)
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    }
    std::size_t pc = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (row[j] != 0) {
        pc = j;
        break;
      }
    if (pc == cols) continue;
    echelon.push_back(std::move(row));
    pivot_col.push_back(pc);
    if (echelon.size() == cols) break;  // cannot grow past full rank
  }
  return static_cast<int>(echelon.size()) + 1;
}

FacetReport check_facet(const Hypergraph& g, const LinearInequality& ineq) {
  const std::size_t dim = g.nodes().size() + g.edges().size();
  if (dim > 20)
    throw SizeLimitExceeded("facet certification is gated at |V|+|E| <= 20");
  SetEnumerator en(g);
  {
    std::vector<Rational> nc, ec;
    split_coeffs(en, ineq.coeffs, nc, ec);  // validates the support
  }

  FacetReport report;
  report.valid = true;
  std::vector<std::vector<int>> tight;
  for (std::uint64_t mask = 0; mask < en.num_points(); ++mask) {
    MultilinearPoint pt = en.point_from_mask(mask);
    Rational value(0);
    std::vector<int> coords;  // assignment map iterates the same keys for
    coords.reserve(dim);      // every point, so columns line up
    for (const auto& [var, bit] : pt.assignment) {
      coords.push_back(bit);
      auto it = ineq.coeffs.find(var);
      if (it != ineq.coeffs.end() && bit) value += it->second;
    }
    if (value > ineq.rhs) {
      report.valid = false;
      continue;
    }
    if (value == ineq.rhs) tight.push_back(std::move(coords));
  }
  report.tight_count = static_cast<std::int64_t>(tight.size());
  report.tight_rank = tight.empty() ? 0 : affine_rank(tight);
  report.is_facet = report.valid && report.tight_rank == static_cast<int>(dim);
  return report;
}

bool check_coefficient_sum(const LinearInequality& ineq) {
  return ineq.coefficient_sum() == ineq.rhs;
}

bool check_decomposition(const Hypergraph& g, NodeId v, int trials, std::uint64_t seed) {
  if (!g.has_node(v)) throw UnknownNode(v);
  if (!is_nest_point(g, v))
    throw HypothesisViolated("node " + std::to_string(v) + " is not a nest point");

  std::vector<Edge> chain = g.edges_containing(v);
  std::sort(chain.begin(), chain.end(), [](const Edge& a, const Edge& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const Edge& e : chain) {
    auto residue = e.without(v);
    if (residue && !g.has_edge(*residue))
      throw HypothesisViolated("residue " + residue->to_string() +
                               " of chain edge " + e.to_string() + " is not an edge");
  }

  Hypergraph part2 = remove_node(g, v);

  // Combined description: the chain hull at v plus a description of the
  // second part. A beta-acyclic second part gets its extended formulation;
  // otherwise its hull enters as an explicit convex combination of its
  // multilinear set (tiny scale only).
  InequalitySystem combined;
  if (chain.empty()) {
    combined.add_variable(VariableId::node(v));
    combined.add_row(LinearInequality({{VariableId::node(v), Rational(1)}}, 1, "hull.ub"));
    combined.add_row(LinearInequality({{VariableId::node(v), Rational(-1)}}, 0, "hull.lb"));
  } else {
    combined.merge(pointed_system(chain, v));
  }

  const bool part2_acyclic = is_beta_acyclic(part2);
  std::vector<MultilinearPoint> hull_points;
  if (part2_acyclic) {
    if (!part2.nodes().empty()) combined.merge(beta_acyclic_formulation(part2).system);
  } else {
    if (part2.nodes().size() > 8)
      throw SizeLimitExceeded("explicit hull of the second part is gated at 8 nodes");
    hull_points = enumerate_points(part2);
    for (NodeId u : part2.nodes()) combined.add_variable(VariableId::node(u));
    for (const Edge& e : part2.edges()) combined.add_variable(VariableId::edge(e));
  }

  // Column layout for the dense LP: combined's variables, then one lambda
  // per hull point when the explicit route is taken.
  std::vector<VariableId> vars = combined.variables();
  std::map<VariableId, std::size_t> column;
  for (std::size_t j = 0; j < vars.size(); ++j) column[vars[j]] = j;
  const std::size_t n_lambda = hull_points.size();
  const std::size_t n_cols = vars.size() + n_lambda;

  DenseLp lp;
  auto push_row = [&](const std::map<std::size_t, Rational>& coeffs, const Rational& rhs) {
    std::vector<Rational> dense(n_cols, Rational(0));
    for (const auto& [j, c] : coeffs) dense[j] = c;
    lp.rows.push_back(std::move(dense));
    lp.rhs.push_back(rhs);
  };
  for (const LinearInequality& row : combined.rows()) {
    std::map<std::size_t, Rational> coeffs;
    for (const auto& [var, c] : row.coeffs) coeffs[column.at(var)] = c;
    push_row(coeffs, row.rhs);
  }
  if (!hull_points.empty()) {
    // sum lambda = 1
    std::map<std::size_t, Rational> ones, neg_ones;
    for (std::size_t p = 0; p < n_lambda; ++p) {
      ones[vars.size() + p] = 1;
      neg_ones[vars.size() + p] = -1;
    }
    push_row(ones, Rational(1));
    push_row(neg_ones, Rational(-1));
    // z_q = sum_p lambda_p q(p) for every variable of the second part
    for (NodeId u : part2.nodes()) {
      VariableId zq = VariableId::node(u);
      std::map<std::size_t, Rational> eq, eq_neg;
      eq[column.at(zq)] = 1;
      eq_neg[column.at(zq)] = -1;
      for (std::size_t p = 0; p < n_lambda; ++p) {
        int bit = hull_points[p].assignment.at(zq);
        if (bit) {
          eq[vars.size() + p] = -1;
          eq_neg[vars.size() + p] = 1;
        }
      }
      push_row(eq, Rational(0));
      push_row(eq_neg, Rational(0));
    }
    for (const Edge& e : part2.edges()) {
      VariableId zq = VariableId::edge(e);
      std::map<std::size_t, Rational> eq, eq_neg;
      eq[column.at(zq)] = 1;
      eq_neg[column.at(zq)] = -1;
      for (std::size_t p = 0; p < n_lambda; ++p) {
        int bit = hull_points[p].assignment.at(zq);
        if (bit) {
          eq[vars.size() + p] = -1;
          eq_neg[vars.size() + p] = 1;
        }
      }
      push_row(eq, Rational(0));
      push_row(eq_neg, Rational(0));
    }
  }

  // Objective sweep: +-unit directions on every node/edge, then seeded
  // random integer directions.
  std::vector<Objective> objectives;
  for (NodeId u : g.nodes()) {
    objectives.push_back({{VariableId::node(u), Rational(1)}});
    objectives.push_back({{VariableId::node(u), Rational(-1)}});
  }
  for (const Edge& e : g.edges()) {
    objectives.push_back({{VariableId::edge(e), Rational(1)}});
    objectives.push_back({{VariableId::edge(e), Rational(-1)}});
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Objective obj;
    for (NodeId u : g.nodes())
      obj[VariableId::node(u)] = Rational(static_cast<long>(draw_int(rng, -10, 10)));
    for (const Edge& e : g.edges())
      obj[VariableId::edge(e)] = Rational(static_cast<long>(draw_int(rng, -10, 10)));
    objectives.push_back(std::move(obj));
  }

  SetEnumerator en(g);
  for (const Objective& objective : objectives) {
    std::vector<Rational> c(n_cols, Rational(0));
    for (const auto& [var, coeff] : objective) c[column.at(var)] = coeff;
    DenseSolution lp_result = solve_max_dense(lp, c);
    if (lp_result.status != LpStatus::optimal) return false;
    auto [exact, point] = en.maximize(objective);
    if (lp_result.objective != exact) return false;
  }
  return true;
}

}  // namespace multipoly
