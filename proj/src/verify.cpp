#include "multipoly/verify.hpp"

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "multipoly/acyclicity.hpp"
#include "multipoly/cuts.hpp"
#include "multipoly/expansion.hpp"
#include "multipoly/formulation.hpp"
#include "multipoly/oracle.hpp"
#include "multipoly/simplex.hpp"

namespace multipoly {

namespace {

long draw_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Objective random_objective(const Hypergraph& g, std::mt19937_64& rng) {
  Objective obj;
  for (NodeId v : g.nodes())
    obj[VariableId::node(v)] = Rational(static_cast<long>(draw_int(rng, -10, 10)));
  for (const Edge& e : g.edges())
    obj[VariableId::edge(e)] = Rational(static_cast<long>(draw_int(rng, -10, 10)));
  return obj;
}

void run_exactness(const Hypergraph& g, std::uint64_t seed, int trials,
                   VerifyReport& report) {
  if (!is_beta_acyclic(g)) {
    report.checks.push_back({"exactness", false, "input is not beta-acyclic"});
    return;
  }
  ExtendedFormulation formulation = beta_acyclic_formulation(g);

  {
    const long r = rank(g);
    const long nv = static_cast<long>(g.nodes().size());
    const long ne = static_cast<long>(g.edges().size());
    std::ostringstream detail;
    detail << formulation.system.size() << " rows, " << formulation.extended_vars.size()
           << " extended variables";
    bool ok = g.edges().empty() ||
              (static_cast<long>(formulation.system.size()) <= (3 * r - 4) * nv + 4 * ne &&
               static_cast<long>(formulation.extended_vars.size()) <= (r - 2) * nv &&
               static_cast<long>(formulation.source.expanded.edges().size()) <=
                   (r - 2) * nv + ne);
    report.checks.push_back({"size-bounds", ok, detail.str()});
  }

  {
    bool law = true;
    for (const LinearInequality& row : formulation.system.rows())
      if (!row.is_nonnegativity() && row.coefficient_sum() != row.rhs) law = false;
    report.checks.push_back({"coefficient-sum", law, ""});
  }

  SetEnumerator oracle(g);
  LpInstance lp(formulation.system);
  std::mt19937_64 rng(seed);
  int agreements = 0;
  bool ok = true;
  for (int t = 0; t < trials && ok; ++t) {
    Objective obj = random_objective(g, rng);
    LpSolution solution = lp.solve(obj);
    if (solution.status != LpStatus::optimal) {
      ok = false;
      break;
    }
    auto [exact, point] = oracle.maximize(obj);
    if (solution.objective != exact) {
      ok = false;
      break;
    }
    ++agreements;
  }
  std::ostringstream detail;
  detail << agreements << "/" << trials << " objectives agree with brute force";
  report.checks.push_back({"exactness", ok, detail.str()});
}

void run_facets(const Hypergraph& g, VerifyReport& report) {
  std::vector<LinearInequality> cut_rows = enumerate_eri(g);
  SetEnumerator oracle(g);
  bool all_valid = true;
  int facets = 0;
  const bool rank_gated = g.nodes().size() + g.edges().size() <= 20;
  for (const LinearInequality& row : cut_rows) {
    if (!oracle.validity(row).valid) {
      all_valid = false;
      continue;
    }
    if (rank_gated && check_facet(g, row).is_facet) ++facets;
  }
  {
    std::ostringstream detail;
    detail << cut_rows.size() << " cuts valid";
    if (rank_gated) detail << ", " << facets << " facet-defining";
    report.checks.push_back({"cut-validity", all_valid, detail.str()});
  }

  // A hypergraph written by `dense-family` gets its dense facet rechecked.
  for (int n = 2; n <= 6; ++n) {
    auto [dense, facet] = dense_facet_family(n);
    if (!(dense == g)) continue;
    FacetReport fr = check_facet(g, facet);
    std::ostringstream detail;
    detail << "tight points: " << fr.tight_count << ", affine rank " << fr.tight_rank
           << " of " << g.nodes().size() + g.edges().size();
    report.checks.push_back({"dense-facet", fr.is_facet, detail.str()});
    break;
  }
}

void run_decomp(const Hypergraph& g, std::uint64_t seed, int trials,
                VerifyReport& report) {
  NestPointSequence seq = nest_point_sequence(g);
  if (seq.order.empty()) {
    report.checks.push_back({"decomposition", false, "no nest point"});
    return;
  }
  ExpandedHypergraph x = expand(g, seq.order);
  bool ok = check_decomposition(x.expanded, seq.order.front(), trials, seed);
  std::ostringstream detail;
  detail << "split at node " << seq.order.front() << ", " << trials
         << " random directions";
  report.checks.push_back({"decomposition", ok, detail.str()});
}

void run_cuts(const Hypergraph& g, VerifyReport& report) {
  std::vector<LinearInequality> unfiltered = enumerate_eri(g, {}, /*filtered=*/false);
  std::vector<LinearInequality> kept = enumerate_eri(g, {}, /*filtered=*/true);

  SetEnumerator oracle(g);
  bool all_valid = true;
  for (const LinearInequality& row : unfiltered)
    if (!oracle.validity(row).valid) all_valid = false;
  {
    std::ostringstream detail;
    detail << unfiltered.size() << " cuts enumerated, " << kept.size() << " kept";
    report.checks.push_back({"cut-validity", all_valid, detail.str()});
  }

  std::set<std::string> kept_keys;
  for (const LinearInequality& row : kept) kept_keys.insert(row.canonical_key());

  InequalitySystem relaxation = standard_linearization(g);
  for (const LinearInequality& row : kept) relaxation.add_row(row);

  LpInstance lp(relaxation);
  bool implied = true;
  int dropped = 0;
  for (const LinearInequality& row : unfiltered) {
    if (kept_keys.count(row.canonical_key())) continue;
    ++dropped;
    LpSolution best = lp.solve(row.coeffs);
    if (best.status != LpStatus::optimal || best.objective > row.rhs) implied = false;
  }
  std::ostringstream detail;
  detail << dropped << " filtered cuts all implied by kept cuts";
  report.checks.push_back({"filter-soundness", implied, detail.str()});
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const VerifyCheck& check : checks)
    if (!check.pass) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const VerifyCheck& check : checks) {
    out << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
    if (!check.detail.empty()) out << "  (" << check.detail << ")";
    out << '\n';
  }
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["pass"] = all_pass();
  doc["checks"] = nlohmann::json::array();
  for (const VerifyCheck& check : checks)
    doc["checks"].push_back(
        {{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
  return doc.dump(2);
}

VerifyReport run_verify(const Hypergraph& g, const std::string& suite,
                        std::uint64_t seed, int trials) {
  VerifyReport report;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& err) {
      report.checks.push_back({name, false, err.what()});
    }
  };
  const bool all = suite == "all";
  if (all || suite == "exactness")
    guarded("exactness", [&] { run_exactness(g, seed, trials, report); });
  if (all || suite == "facets") guarded("facets", [&] { run_facets(g, report); });
  if (all || suite == "decomp")
    guarded("decomposition", [&] { run_decomp(g, seed, std::max(trials, 50), report); });
  if (all || suite == "cuts") guarded("cuts", [&] { run_cuts(g, report); });
  if (report.checks.empty())
    throw BadParameter("unknown suite '" + suite +
                       "' (expected exactness|facets|decomp|cuts|all)");
  return report;
}

}  // namespace multipoly
