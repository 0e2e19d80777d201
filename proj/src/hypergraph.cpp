#include "multipoly/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace multipoly {

Edge::Edge(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  auto dup = std::adjacent_find(nodes_.begin(), nodes_.end());
  if (dup != nodes_.end())
    throw InvariantViolation("duplicate node " + std::to_string(*dup) + " in edge");
  if (nodes_.size() < 2)
    throw InvariantViolation("edge needs at least two nodes, got " +
                             std::to_string(nodes_.size()));
}

bool Edge::contains(NodeId v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

bool Edge::subset_of(const Edge& other) const {
  return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(),
                       nodes_.end());
}

bool Edge::strict_subset_of(const Edge& other) const {
  return nodes_.size() < other.nodes_.size() && subset_of(other);
}

std::optional<Edge> Edge::without(NodeId v) const {
  if (!contains(v)) return *this;
  if (nodes_.size() < 3) return std::nullopt;
  std::vector<NodeId> rest;
  rest.reserve(nodes_.size() - 1);
  for (NodeId u : nodes_)
    if (u != v) rest.push_back(u);
  return Edge(std::move(rest));
}

std::optional<Edge> Edge::without_all(const std::vector<NodeId>& sorted_removed) const {
  std::vector<NodeId> rest;
  rest.reserve(nodes_.size());
  std::set_difference(nodes_.begin(), nodes_.end(), sorted_removed.begin(),
                      sorted_removed.end(), std::back_inserter(rest));
  if (rest.size() < 2) return std::nullopt;
  return Edge(std::move(rest));
}

std::string Edge::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i) out << ',';
    out << nodes_[i];
  }
  out << '}';
  return out.str();
}

Hypergraph::Hypergraph(std::set<NodeId> nodes, std::set<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (const Edge& e : edges_)
    for (NodeId v : e.nodes())
      if (!nodes_.count(v))
        throw InvariantViolation("edge " + e.to_string() + " uses unknown node " +
                                 std::to_string(v));
}

Hypergraph Hypergraph::from_edges(const std::vector<Edge>& edges) {
  std::set<NodeId> nodes;
  std::set<Edge> edge_set;
  for (const Edge& e : edges) {
    nodes.insert(e.nodes().begin(), e.nodes().end());
    edge_set.insert(e);
  }
  return Hypergraph(std::move(nodes), std::move(edge_set));
}

std::vector<Edge> Hypergraph::edges_containing(NodeId v) const {
  std::vector<Edge> result;
  for (const Edge& e : edges_)
    if (e.contains(v)) result.push_back(e);
  return result;
}

Hypergraph remove_node(const Hypergraph& g, NodeId v, RemoveNodeStats* stats) {
  if (!g.has_node(v)) throw UnknownNode(v);
  std::set<NodeId> nodes = g.nodes();
  nodes.erase(v);
  std::set<Edge> edges;
  RemoveNodeStats local;
  for (const Edge& e : g.edges()) {
    auto shrunk = e.without(v);
    if (!shrunk) {
      ++local.dropped;
      continue;
    }
    if (!edges.insert(*shrunk).second) ++local.merged;
  }
  if (stats) *stats = local;
  return Hypergraph(std::move(nodes), std::move(edges));
}

int rank(const Hypergraph& g) {
  std::size_t r = 0;
  for (const Edge& e : g.edges()) r = std::max(r, e.size());
  return static_cast<int>(r);
}

std::set<Edge> maximal_edges(const Hypergraph& g) {
  std::set<Edge> result;
  for (const Edge& e : g.edges()) {
    bool dominated = false;
    for (const Edge& f : g.edges())
      if (e.strict_subset_of(f)) {
        dominated = true;
        break;
      }
    if (!dominated) result.insert(e);
  }
  return result;
}

Hypergraph hg_union(const Hypergraph& a, const Hypergraph& b) {
  std::set<NodeId> nodes = a.nodes();
  nodes.insert(b.nodes().begin(), b.nodes().end());
  std::set<Edge> edges = a.edges();
  edges.insert(b.edges().begin(), b.edges().end());
  return Hypergraph(std::move(nodes), std::move(edges));
}

Hypergraph hg_intersection(const Hypergraph& a, const Hypergraph& b) {
  std::set<NodeId> nodes;
  std::set_intersection(a.nodes().begin(), a.nodes().end(), b.nodes().begin(),
                        b.nodes().end(), std::inserter(nodes, nodes.end()));
  std::set<Edge> edges;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(),
                        b.edges().end(), std::inserter(edges, edges.end()));
  return Hypergraph(std::move(nodes), std::move(edges));
}

namespace {

Hypergraph parse_hypergraph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(1, static_cast<int>(err.byte), err.what());
  }
  if (!doc.is_object()) throw ParseError(1, 1, "expected a JSON object");
  const bool nodes_declared = doc.contains("nodes");
  std::set<NodeId> nodes;
  if (nodes_declared)
    for (const auto& n : doc.at("nodes")) nodes.insert(n.get<NodeId>());
  std::set<Edge> edges;
  if (doc.contains("edges")) {
    for (const auto& arr : doc.at("edges")) {
      std::vector<NodeId> ids;
      for (const auto& n : arr) ids.push_back(n.get<NodeId>());
      if (ids.size() < 2) throw ParseError(1, 1, "edge with fewer than two nodes");
      Edge e{std::move(ids)};
      for (NodeId v : e.nodes()) {
        if (nodes_declared && !nodes.count(v))
          throw InvariantViolation("edge uses undeclared node " + std::to_string(v));
        if (!nodes_declared) nodes.insert(v);
      }
      if (!edges.insert(e).second)
        throw InvariantViolation("duplicate edge " + e.to_string());
    }
  }
  return Hypergraph(std::move(nodes), std::move(edges));
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  // JSON mirror is accepted wherever the text format is.
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_hypergraph_json(text);
    break;
  }

  std::set<NodeId> declared;
  bool have_nodes_line = false;
  std::set<Edge> edges;
  std::set<NodeId> used;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;

    auto column_of = [&](const std::string& token) {
      auto pos = line.find(token);
      return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
    };

    std::vector<NodeId> ids;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used_chars = 0;
        NodeId id = std::stoll(token, &used_chars);
        if (used_chars != token.size()) throw std::invalid_argument(token);
        if (id < 0) throw ParseError(lineno, column_of(token), "negative node id");
        ids.push_back(id);
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, column_of(token), "expected a node id, got '" + token + "'");
      } catch (const std::out_of_range&) {
        throw ParseError(lineno, column_of(token), "node id out of range");
      }
    }

    if (keyword == "nodes") {
      have_nodes_line = true;
      declared.insert(ids.begin(), ids.end());
    } else if (keyword == "edge") {
      if (ids.size() < 2)
        throw ParseError(lineno, column_of(keyword), "edge needs at least two nodes");
      std::vector<NodeId> sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(lineno, column_of(keyword), "repeated node in edge");
      Edge e{std::move(sorted)};
      if (!edges.insert(e).second)
        throw InvariantViolation("duplicate edge " + e.to_string() + " at line " +
                                 std::to_string(lineno));
      used.insert(e.nodes().begin(), e.nodes().end());
    } else {
      throw ParseError(lineno, column_of(keyword), "unknown keyword '" + keyword + "'");
    }
  }

  if (have_nodes_line) {
    for (NodeId v : used)
      if (!declared.count(v))
        throw InvariantViolation("edge uses undeclared node " + std::to_string(v));
    return Hypergraph(std::move(declared), std::move(edges));
  }
  return Hypergraph(std::move(used), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& g) {
  std::ostringstream out;
  out << "nodes";
  for (NodeId v : g.nodes()) out << ' ' << v;
  out << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge";
    for (NodeId v : e.nodes()) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace multipoly
