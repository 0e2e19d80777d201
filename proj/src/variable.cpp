#include "multipoly/variable.hpp"

#include <sstream>

namespace multipoly {

VariableId VariableId::for_set(const std::vector<NodeId>& sorted_nodes) {
  if (sorted_nodes.empty())
    throw std::invalid_argument("variable for an empty node set");
  if (sorted_nodes.size() == 1) return node(sorted_nodes.front());
  return edge(Edge(sorted_nodes));
}

std::string VariableId::name() const {
  if (is_node()) return "z" + std::to_string(node_);
  std::ostringstream out;
  out << "zE";
  for (NodeId v : edge_->nodes()) out << '_' << v;
  return out.str();
}

std::optional<VariableId> VariableId::parse_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'z') return std::nullopt;
  if (name.rfind("zE_", 0) == 0) {
    std::vector<NodeId> ids;
    std::string token;
    std::istringstream in{std::string(name.substr(3))};
    while (std::getline(in, token, '_')) {
      try {
        std::size_t used = 0;
        NodeId id = std::stoll(token, &used);
        if (used != token.size() || id < 0) return std::nullopt;
        ids.push_back(id);
      } catch (...) {
        return std::nullopt;
      }
    }
    if (ids.size() < 2) return std::nullopt;
    try {
      return edge(Edge(std::move(ids)));
    } catch (const InvariantViolation&) {
      return std::nullopt;
    }
  }
  try {
    std::size_t used = 0;
    std::string digits{name.substr(1)};
    NodeId id = std::stoll(digits, &used);
    if (used != digits.size() || id < 0) return std::nullopt;
    return node(id);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace multipoly
