#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fattree/designer.hpp"
#include "fattree/error.hpp"
#include "fattree/placement.hpp"

namespace fattree {

/// Nodes that can be added to an installed network without touching the core layer.
struct ExpansionAudit {
  int via_spare_edge_ports = 0;
  int new_edge_switches = 0;
  int via_new_edge_switches = 0;
  int max_added_nodes = 0;
  int used_units = 0;
  int wasted_units = 0;
  std::int64_t free_core_ports_before = 0;
  std::int64_t free_core_ports_after = 0;
};

/// Fills `extra_units` of new rack space: first nodes on free edge ports (their
/// uplinks are already wired), then new edge switches on free core ports.
inline ExpansionAudit expansion_audit(const FatTreeDesign& design, int extra_units, const NodeSpec& node) {
  ExpansionAudit a;
  const int node_u = node.rack_units;
  const int edge_u = design.edge_config.rack_units;
  int room = std::max(0, extra_units);

  std::int64_t spare_edge = 0;
  std::int64_t free_core = 0;
  switch (design.kind) {
  case TopologyKind::fat_tree:
    spare_edge = static_cast<std::int64_t>(design.edge_count()) * design.nodes_per_edge - design.node_count;
    free_core = static_cast<std::int64_t>(design.core_count()) * design.core_config->ports -
                static_cast<std::int64_t>(design.edge_count()) * design.uplinks_per_edge;
    break;
  case TopologyKind::star: spare_edge = design.edge_config.ports - design.node_count; break;
  case TopologyKind::direct_connect: break;
  }
  a.free_core_ports_before = free_core;

  a.via_spare_edge_ports = static_cast<int>(std::min<std::int64_t>(spare_edge, room / node_u));
  room -= a.via_spare_edge_ports * node_u;

  if (design.kind == TopologyKind::fat_tree && design.uplinks_per_edge > 0) {
    const int per_edge = design.nodes_per_edge;
    const int uplinks = design.uplinks_per_edge;
    while (room >= edge_u + node_u && free_core > 0) {
      std::int64_t by_ports = free_core * per_edge / uplinks;
      int k = static_cast<int>(std::min<std::int64_t>({per_edge, (room - edge_u) / node_u, by_ports}));
      if (k <= 0) break;
      ++a.new_edge_switches;
      a.via_new_edge_switches += k;
      room -= edge_u + k * node_u;
      free_core -= ceil_div(static_cast<std::int64_t>(k) * uplinks, per_edge);
    }
  }
  a.free_core_ports_after = free_core;
  a.max_added_nodes = a.via_spare_edge_ports + a.via_new_edge_switches;
  a.used_units = std::max(0, extra_units) - room;
  a.wasted_units = room;
  return a;
}

/// Largest node count whose network still fits next to the nodes in
/// `capacity_units`. `base` supplies blocking factor, node size and prices.
inline DesignReport max_nodes_for_capacity(int capacity_units, const DesignRequest& base, const Catalog& cat,
                                           const DesignOptions& opts = {}) {
  const auto* rack = base.rack_mounted();
  if (!rack) throw ValidationError("form_factor", "capacity planning needs rack-mounted nodes");
  for (int n = capacity_units / rack->node_rack_units; n >= 2; --n) {
    DesignRequest req = base;
    req.node_count = n;
    std::int64_t left = static_cast<std::int64_t>(capacity_units) - static_cast<std::int64_t>(n) * rack->node_rack_units;
    req.constraints.max_network_rack_units =
        base.constraints.max_network_rack_units ? std::min(left, *base.constraints.max_network_rack_units) : left;
    auto report = design(req, cat, opts);
    if (report.ok()) return report;
  }
  throw InfeasibleError("no node count >= 2 fits in " + std::to_string(capacity_units) + " U");
}

struct InstallPhase {
  int nodes = 0; // cumulative
  int edge_switches = 0;
  int core_switches = 0;
  int rack_units = 0;
};

struct InstallVariant {
  std::string name;
  std::vector<InstallPhase> phases; // initial, then final

  int initial_nodes() const { return phases.front().nodes; }
};

struct ExpansionPlan {
  int current_capacity_units = 0;
  int target_capacity_units = 0;
  FatTreeDesign baseline; // best non-expandable design for the current space
  ExpansionAudit baseline_audit;
  FatTreeDesign target; // core sized for the largest anticipated node count
  int target_max_nodes = 0;
  int core_switches_upfront = 0;
  std::int64_t spare_core_ports = 0;
  int switch_units = 0;
  InstallVariant all_upfront;
  InstallVariant core_upfront;
};

inline ExpansionPlan expansion_plan(int current_units, int target_units, const Catalog& cat,
                                    const DesignRequest& base, const DesignOptions& opts = {}) {
  if (current_units < 1 || target_units < current_units)
    throw ValidationError("capacity", "need 0 < current capacity <= target capacity");
  const auto* rack = base.rack_mounted();
  if (!rack) throw ValidationError("form_factor", "expansion planning needs rack-mounted nodes");
  NodeSpec node{rack->node_rack_units, rack->node_power, rack->node_weight};

  ExpansionPlan plan;
  plan.current_capacity_units = current_units;
  plan.target_capacity_units = target_units;

  plan.baseline = *max_nodes_for_capacity(current_units, base, cat, opts).winner;
  plan.baseline_audit = expansion_audit(plan.baseline, target_units - current_units, node);

  DesignRequest expandable = base;
  expandable.prefer_expandability = true;
  plan.target = *max_nodes_for_capacity(target_units, expandable, cat, opts).winner;
  const auto& t = plan.target;
  plan.target_max_nodes = t.node_count;
  plan.core_switches_upfront = t.core_count();
  plan.spare_core_ports = t.kind == TopologyKind::fat_tree ? t.spare_core_ports() : 0;
  plan.switch_units = static_cast<int>(t.metrics.rack_units);

  const int node_u = node.rack_units;
  const int edge_u = t.edge_config.rack_units;
  const int core_u = t.core_config ? t.core_config->rack_units : 0;
  const int core_units = t.core_count() * core_u;
  InstallPhase final_phase{t.node_count, t.edge_count(), t.core_count(), plan.switch_units + t.node_count * node_u};

  // Every switch installed at once; nodes fill what is left.
  {
    int nodes = std::clamp((current_units - plan.switch_units) / node_u, 0, t.node_count);
    plan.all_upfront.name = "all_switches_upfront";
    plan.all_upfront.phases = {{nodes, t.edge_count(), t.core_count(), plan.switch_units + nodes * node_u},
                               final_phase};
  }
  // Core layer installed at once; edge switches bought as nodes arrive.
  {
    int best = 0;
    int best_edges = 0;
    for (int n = t.node_count; n >= 0; --n) {
      int edges = static_cast<int>(ceil_div(n, t.nodes_per_edge));
      if (n * node_u + edges * edge_u + core_units <= current_units) {
        best = n;
        best_edges = edges;
        break;
      }
    }
    plan.core_upfront.name = "core_upfront_edges_deferred";
    plan.core_upfront.phases = {{best, best_edges, t.core_count(), best * node_u + best_edges * edge_u + core_units},
                                final_phase};
  }
  return plan;
}

} // namespace fattree
