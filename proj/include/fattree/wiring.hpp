#pragma once

#include <sstream>
#include <string>

#include "fattree/designer.hpp"

namespace fattree {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace detail

/// Graphviz DOT description of a design. Node-to-switch links are plain edges;
/// edge-to-core bundles carry their width as label and `weight`.
inline std::string emit_wiring(const FatTreeDesign& d) {
  using detail::dot_quote;
  std::ostringstream os;
  os << "graph fattree {\n";
  os << "  graph [label=" << dot_quote(d.label() + ", " + std::to_string(d.node_count) + " nodes") << "];\n";
  os << "  node [shape=box];\n";

  auto node_id = [](int i) { return "n" + std::to_string(i); };
  auto edge_id = [](int i) { return "e" + std::to_string(i); };
  auto core_id = [](int j) { return "c" + std::to_string(j); };

  if (d.kind == TopologyKind::star) {
    os << "  s0 [label=" << dot_quote(d.edge_config.id()) << "];\n";
    for (int i = 0; i < d.node_count; ++i) os << "  " << node_id(i) << " [shape=point];\n";
    for (int i = 0; i < d.node_count; ++i) os << "  " << node_id(i) << " -- s0;\n";
    os << "}\n";
    return os.str();
  }

  if (d.kind == TopologyKind::direct_connect) {
    // Two switches with the first enclosure on e0 and the rest on e1; the
    // pass-through form is a single switch with the second enclosure cabled in.
    const int switches = d.edge_count();
    const int first = std::min(d.nodes_per_edge, d.node_count);
    for (int s = 0; s < switches; ++s) os << "  " << edge_id(s) << " [label=" << dot_quote(d.edge_config.id()) << "];\n";
    for (int i = 0; i < d.node_count; ++i) os << "  " << node_id(i) << " [shape=point];\n";
    for (int i = 0; i < d.node_count; ++i) {
      int s = (switches > 1 && i >= first) ? 1 : 0;
      os << "  " << node_id(i) << " -- " << edge_id(s) << ";\n";
    }
    if (switches > 1 && d.cable_count > 0)
      os << "  e0 -- e1 [label=\"" << d.cable_count << "\", weight=" << d.cable_count
         << ", penwidth=" << std::min<std::int64_t>(d.cable_count, 8) << "];\n";
    os << "}\n";
    return os.str();
  }

  const int E = d.edge_count();
  const int C = d.core_count();
  os << "  subgraph core {\n    rank=same;\n";
  for (int j = 0; j < C; ++j)
    os << "    " << core_id(j) << " [label=" << dot_quote(d.core_config->id() + " #" + std::to_string(j)) << "];\n";
  os << "  }\n";
  os << "  subgraph edge {\n    rank=same;\n";
  for (int i = 0; i < E; ++i) {
    std::string label = d.edge_config.id() + " #" + std::to_string(i);
    int used = d.nodes_on_edge(i);
    if (used < d.split.ports_to_nodes) {
      label += "\\n" + std::to_string(used) + " of " + std::to_string(d.split.ports_to_nodes) + " node ports used, " +
               std::to_string(d.split.ports_to_nodes - used) + " unused";
    }
    os << "    " << edge_id(i) << " [label=\"" << label << "\"];\n";
  }
  os << "  }\n";
  for (int i = 0; i < d.node_count; ++i) os << "  " << node_id(i) << " [shape=point];\n";
  for (int e = 0, n = 0; e < E; ++e) {
    for (int k = 0; k < d.nodes_on_edge(e); ++k, ++n) os << "  " << node_id(n) << " -- " << edge_id(e) << ";\n";
  }
  auto links = d.links_to_core();
  for (int e = 0; e < E; ++e) {
    for (int j = 0; j < C; ++j) {
      int w = links[static_cast<std::size_t>(j)];
      if (w <= 0) continue;
      os << "  " << edge_id(e) << " -- " << core_id(j) << " [label=\"" << w << "\", weight=" << w
         << ", penwidth=" << std::min(w, 8) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace fattree
