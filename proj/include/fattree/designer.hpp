#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "fattree/catalog.hpp"
#include "fattree/error.hpp"
#include "fattree/rational.hpp"
#include "fattree/units.hpp"

namespace fattree {

// ---------------------------------------------------------------------------
// Request
// ---------------------------------------------------------------------------

struct RackMountedNodes {
  int node_rack_units = 1;
  Power node_power;
  Weight node_weight;
  std::optional<Money> node_cost;
};

/// Blade servers in enclosures, each enclosure carrying one embedded edge switch.
struct BladeEnclosures {
  int enclosure_capacity = 16;
  Money enclosure_cost;
  std::string embedded_edge_switch_id;
  std::optional<Money> pass_through_cost;
  std::optional<Money> node_cost;
};

using FormFactor = std::variant<RackMountedNodes, BladeEnclosures>;

struct ConstraintSet {
  std::optional<std::int64_t> max_network_rack_units;
  std::optional<std::int64_t> min_spare_core_ports;
  std::optional<Power> max_network_power;
  std::optional<Money> max_network_cost;

  bool empty() const {
    return !max_network_rack_units && !min_spare_core_ports && !max_network_power && !max_network_cost;
  }
};

struct DesignRequest {
  int node_count = 2;
  Rational blocking_factor{1};
  FormFactor form_factor = RackMountedNodes{};
  Money avg_cable_cost = dollars(80);
  ConstraintSet constraints;
  bool prefer_expandability = false;

  const BladeEnclosures* blade() const { return std::get_if<BladeEnclosures>(&form_factor); }
  const RackMountedNodes* rack_mounted() const { return std::get_if<RackMountedNodes>(&form_factor); }

  void validate() const {
    if (node_count < 2) throw ValidationError("node_count", "must be >= 2");
    if (blocking_factor <= Rational(0)) throw ValidationError("blocking_factor", "must be > 0");
    if (avg_cable_cost.value < 0) throw ValidationError("avg_cable_cost", "must be >= 0");
    if (const auto* b = blade()) {
      if (b->enclosure_capacity < 1) throw ValidationError("form_factor.blade.enclosure_capacity", "must be >= 1");
      if (b->embedded_edge_switch_id.empty())
        throw ValidationError("form_factor.blade.embedded_edge_switch_id", "must not be empty");
    } else if (rack_mounted()->node_rack_units < 1) {
      throw ValidationError("form_factor.rack_mounted.node_rack_units", "must be >= 1");
    }
    const auto& c = constraints;
    if ((c.max_network_rack_units && *c.max_network_rack_units < 0) ||
        (c.min_spare_core_ports && *c.min_spare_core_ports < 0) ||
        (c.max_network_power && c.max_network_power->value < 0) ||
        (c.max_network_cost && c.max_network_cost->value < 0))
      throw ValidationError("constraints", "values must be >= 0");
  }
};

// ---------------------------------------------------------------------------
// Layer arithmetic
// ---------------------------------------------------------------------------

struct PortSplit {
  int ports_to_nodes = 0;
  int ports_to_core = 0;
  Rational resulting_blocking;
};

struct EdgeSplit {
  int ports_to_nodes = 0;
  int ports_to_core = 0;
  Rational resulting_blocking;
  int edge_count = 0;
};

struct CoreStage {
  int bundle_width = 0;
  int core_count = 0;

  friend bool operator==(const CoreStage&, const CoreStage&) = default;
};

/// Largest node-port count whose ratio to the remaining uplinks stays within the
/// blocking factor: floor(P_E * Bl / (1 + Bl)). Empty when no port can face nodes.
inline std::optional<PortSplit> edge_port_split(int edge_ports, const Rational& blocking) {
  assert(edge_ports >= 2 && blocking > Rational(0));
  int128 wide = static_cast<int128>(edge_ports) * blocking.num() / (blocking.num() + blocking.den());
  int to_nodes = static_cast<int>(wide);
  if (to_nodes == 0) return std::nullopt;
  int to_core = edge_ports - to_nodes;
  assert(to_core > 0);
  return PortSplit{to_nodes, to_core, Rational(to_nodes, to_core)};
}

inline int edge_count(std::int64_t nodes, int ports_to_nodes) {
  assert(ports_to_nodes >= 1);
  return static_cast<int>(ceil_div(nodes, ports_to_nodes));
}

/// Bundle width and core switch count. Empty when a core switch has fewer ports
/// than there are edge switches.
inline std::optional<CoreStage> core_stage(int edges, int uplinks_per_edge, int core_ports) {
  assert(edges >= 1 && uplinks_per_edge >= 1);
  if (core_ports < edges) return std::nullopt;
  int bundle = std::min(core_ports / edges, uplinks_per_edge);
  int cores = static_cast<int>(ceil_div(uplinks_per_edge, bundle));
  return CoreStage{bundle, cores};
}

/// Node cables plus one cable per wired uplink; blade nodes need no cables.
inline std::int64_t cable_count(std::int64_t nodes, std::int64_t edges, std::int64_t uplinks_per_edge, bool blade) {
  return (blade ? 0 : nodes) + edges * uplinks_per_edge;
}

/// Recomputation with nodes spread evenly over the edge switches. Returned only
/// when it saves core switches and expandability was not requested.
struct UniformStage {
  int nodes_per_edge = 0;
  int uplinks_per_edge = 0;
  CoreStage core;
};

inline std::optional<UniformStage> uniform_distribution_variant(int nodes, int edges, const Rational& blocking,
                                                                int edge_ports, int core_ports,
                                                                const CoreStage& baseline,
                                                                bool prefer_expandability) {
  if (prefer_expandability || edges < 1 || core_ports < edges) return std::nullopt;
  int per_edge = static_cast<int>(ceil_div(nodes, edges));
  int uplinks = static_cast<int>((Rational(per_edge) / blocking).ceil());
  if (per_edge + uplinks > edge_ports) return std::nullopt;
  int bundle = std::min(core_ports / edges, uplinks);
  int cores = static_cast<int>(ceil_div(uplinks, bundle));
  if (cores >= baseline.core_count) return std::nullopt;
  return UniformStage{per_edge, uplinks, CoreStage{bundle, cores}};
}

// ---------------------------------------------------------------------------
// Designs
// ---------------------------------------------------------------------------

enum class TopologyKind { fat_tree, star, direct_connect };

inline const char* to_string(TopologyKind k) {
  switch (k) {
  case TopologyKind::fat_tree: return "fat_tree";
  case TopologyKind::star: return "star";
  case TopologyKind::direct_connect: return "direct_connect";
  }
  return "?";
}

struct NetworkMetrics {
  Money switch_cost;
  Money pass_through_cost;
  Money cable_cost;
  Money cost; // switches + pass-through panels + cables
  Power power;
  std::int64_t rack_units = 0;
  Weight weight;
};

/// Scalar to minimize. Must be a pure function of the aggregate metrics.
using ObjectiveFn = std::function<std::int64_t(const NetworkMetrics&)>;

inline std::int64_t acquisition_cost(const NetworkMetrics& m) { return m.cost.value; }

struct FatTreeDesign {
  TopologyKind kind = TopologyKind::fat_tree;
  int node_count = 0;
  SwitchConfig edge_config;
  std::optional<SwitchConfig> core_config;
  EdgeSplit split;
  CoreStage core;
  // Attachment target per edge switch; the last switch takes the remainder.
  int nodes_per_edge = 0;
  // Wired core-facing links per edge switch (P_Ec for the full fabric).
  int uplinks_per_edge = 0;
  std::int64_t cable_count = 0;
  bool uniform_distribution = false;
  bool pass_through = false;
  std::int64_t max_supported_nodes = 0;
  NetworkMetrics metrics;
  std::int64_t objective = 0;

  int edge_count() const { return split.edge_count; }
  int core_count() const { return core.core_count; }
  int switch_count() const { return split.edge_count + core.core_count; }

  int nodes_on_edge(int i) const {
    if (i < 0 || i >= split.edge_count) return 0;
    int before = i * nodes_per_edge;
    return std::max(0, std::min(nodes_per_edge, node_count - before));
  }

  /// Links from every edge switch to core switch j; equal bundles except the last.
  std::vector<int> links_to_core() const {
    std::vector<int> links;
    if (kind != TopologyKind::fat_tree) return links;
    for (int j = 0; j < core.core_count; ++j) {
      int remaining = uplinks_per_edge - j * core.bundle_width;
      links.push_back(std::min(core.bundle_width, remaining));
    }
    return links;
  }

  /// Unused core ports plus ports addable by installing more line cards.
  std::int64_t spare_core_ports() const {
    if (kind == TopologyKind::fat_tree) {
      const auto& c = *core_config;
      return static_cast<std::int64_t>(core.core_count) * c.ports -
             static_cast<std::int64_t>(split.edge_count) * uplinks_per_edge +
             static_cast<std::int64_t>(core.core_count) * c.expandable_ports;
    }
    // No core layer: count what is left on the switches that exist.
    std::int64_t used = node_count;
    if (kind == TopologyKind::direct_connect && !pass_through) used += 2 * cable_count;
    return static_cast<std::int64_t>(split.edge_count) * (edge_config.ports + edge_config.expandable_ports) - used;
  }

  std::string label() const {
    std::string s = to_string(kind);
    s += " edge=" + edge_config.id();
    if (core_config) s += " core=" + core_config->id();
    if (uniform_distribution) s += " uniform";
    if (pass_through) s += " pass_through";
    return s;
  }
};

namespace detail {

inline void finish(FatTreeDesign& d, const DesignRequest& req, const ObjectiveFn& objective) {
  auto& m = d.metrics;
  std::int64_t e = d.split.edge_count;
  std::int64_t c = d.core.core_count;
  m.switch_cost = e * d.edge_config.cost;
  m.power = e * d.edge_config.power;
  m.rack_units = e * d.edge_config.rack_units;
  m.weight = e * d.edge_config.weight;
  if (d.core_config) {
    m.switch_cost += c * d.core_config->cost;
    m.power += c * d.core_config->power;
    m.rack_units += c * d.core_config->rack_units;
    m.weight += c * d.core_config->weight;
  }
  m.cable_cost = d.cable_count * req.avg_cable_cost;
  m.cost = m.switch_cost + m.pass_through_cost + m.cable_cost;
  d.objective = objective(m);
}

inline bool usable_for(const SwitchConfig& c, const DesignRequest& req) { return req.blade() || !c.blade_embedded; }

} // namespace detail

inline FatTreeDesign make_fat_tree(const DesignRequest& req, const SwitchConfig& edge, const SwitchConfig& core,
                                   const PortSplit& split, int edges, const CoreStage& stage, int nodes_per_edge,
                                   int uplinks_per_edge, bool uniform, const ObjectiveFn& objective) {
  FatTreeDesign d;
  d.kind = TopologyKind::fat_tree;
  d.node_count = req.node_count;
  d.edge_config = edge;
  d.core_config = core;
  d.split = {split.ports_to_nodes, split.ports_to_core, Rational(nodes_per_edge, uplinks_per_edge), edges};
  d.core = stage;
  d.nodes_per_edge = nodes_per_edge;
  d.uplinks_per_edge = uplinks_per_edge;
  d.cable_count = cable_count(req.node_count, edges, uplinks_per_edge, req.blade() != nullptr);
  d.uniform_distribution = uniform;
  d.max_supported_nodes = static_cast<std::int64_t>(core.ports) *
                          (req.blade() ? std::min(split.ports_to_nodes, req.blade()->enclosure_capacity)
                                       : split.ports_to_nodes);
  detail::finish(d, req, objective);
  return d;
}

// ---------------------------------------------------------------------------
// Constraints
// ---------------------------------------------------------------------------

struct ConstraintViolation {
  std::string constraint;
  std::int64_t limit = 0;
  std::int64_t actual = 0;
  std::string unit;

  std::string describe() const {
    return constraint + ": actual " + std::to_string(actual) + " " + unit + ", limit " + std::to_string(limit) + " " +
           unit;
  }
};

inline std::vector<ConstraintViolation> check_constraints(const FatTreeDesign& d, const ConstraintSet& c) {
  std::vector<ConstraintViolation> out;
  if (c.max_network_rack_units && d.metrics.rack_units > *c.max_network_rack_units)
    out.push_back({"max_network_rack_units", *c.max_network_rack_units, d.metrics.rack_units, "U"});
  if (c.min_spare_core_ports && d.spare_core_ports() < *c.min_spare_core_ports)
    out.push_back({"min_spare_core_ports", *c.min_spare_core_ports, d.spare_core_ports(), "ports"});
  if (c.max_network_power && d.metrics.power > *c.max_network_power)
    out.push_back({"max_network_power", c.max_network_power->value, d.metrics.power.value, "mW"});
  if (c.max_network_cost && d.metrics.cost > *c.max_network_cost)
    out.push_back({"max_network_cost", c.max_network_cost->value, d.metrics.cost.value, "minor units"});
  return out;
}

inline std::int64_t evaluate_objective(const FatTreeDesign& d, const ObjectiveFn& objective = acquisition_cost) {
  return objective(d.metrics);
}

/// Deterministic ranking: objective, then fewer switches, fewer rack units, ids.
inline bool ranks_before(const FatTreeDesign& a, const FatTreeDesign& b) {
  auto key = [](const FatTreeDesign& d) {
    return std::make_tuple(d.objective, d.switch_count(), d.metrics.rack_units, d.edge_config.id(),
                           d.core_config ? d.core_config->id() : std::string(), static_cast<int>(d.kind),
                           d.uniform_distribution, d.pass_through);
  };
  return key(a) < key(b);
}

// ---------------------------------------------------------------------------
// Trivial cases
// ---------------------------------------------------------------------------

namespace detail {

inline const SwitchConfig& embedded_switch(const DesignRequest& req, const Catalog& cat) {
  const auto* b = req.blade();
  const SwitchConfig* sw = cat.find(b->embedded_edge_switch_id);
  if (!sw)
    throw ValidationError("form_factor.blade.embedded_edge_switch_id",
                          "'" + b->embedded_edge_switch_id + "' is not in the catalog");
  return *sw;
}

/// Both two-enclosure arrangements: two embedded switches cabled together, and
/// one switch plus a pass-through panel when a panel price is known.
inline std::vector<FatTreeDesign> direct_connect_candidates(const DesignRequest& req, const Catalog& cat,
                                                            const ObjectiveFn& objective) {
  std::vector<FatTreeDesign> out;
  const auto* b = req.blade();
  if (!b) return out;
  int cap = b->enclosure_capacity;
  int n = req.node_count;
  if (!(n > cap && n <= 2 * cap)) return out;
  const SwitchConfig& sw = embedded_switch(req, cat);

  int cross = sw.ports - cap;
  int second = n - cap;
  if (cross >= 1 && Rational(std::min(cap, second), cross) <= req.blocking_factor) {
    FatTreeDesign d;
    d.kind = TopologyKind::direct_connect;
    d.node_count = n;
    d.edge_config = sw;
    d.split = {cap, cross, Rational(std::min(cap, second), cross), 2};
    d.core = {cross, 0};
    d.nodes_per_edge = cap;
    d.uplinks_per_edge = cross;
    d.cable_count = cross;
    d.max_supported_nodes = 2 * static_cast<std::int64_t>(cap);
    finish(d, req, objective);
    out.push_back(std::move(d));
  }
  if (b->pass_through_cost && n <= sw.ports) {
    FatTreeDesign d;
    d.kind = TopologyKind::direct_connect;
    d.pass_through = true;
    d.node_count = n;
    d.edge_config = sw;
    d.split = {n, 0, Rational(0), 1};
    d.core = {0, 0};
    d.nodes_per_edge = n;
    d.uplinks_per_edge = 0;
    d.cable_count = second;
    d.max_supported_nodes = sw.ports;
    d.metrics.pass_through_cost = *b->pass_through_cost;
    finish(d, req, objective);
    out.push_back(std::move(d));
  }
  return out;
}

inline FatTreeDesign make_star(const DesignRequest& req, const SwitchConfig& sw, std::int64_t cables,
                               Money pass_through, const ObjectiveFn& objective) {
  FatTreeDesign d;
  d.kind = TopologyKind::star;
  d.node_count = req.node_count;
  d.edge_config = sw;
  d.split = {req.node_count, 0, Rational(0), 1};
  d.core = {0, 0};
  d.nodes_per_edge = req.node_count;
  d.uplinks_per_edge = 0;
  d.cable_count = cables;
  d.max_supported_nodes = sw.ports;
  d.metrics.pass_through_cost = pass_through;
  finish(d, req, objective);
  return d;
}

/// Every single-switch network able to host all nodes.
inline std::vector<FatTreeDesign> star_candidates(const DesignRequest& req, const Catalog& cat,
                                                  const ObjectiveFn& objective) {
  std::vector<FatTreeDesign> out;
  int n = req.node_count;
  if (const auto* b = req.blade()) {
    if (n <= b->enclosure_capacity) {
      const SwitchConfig& sw = embedded_switch(req, cat);
      if (sw.ports >= n) out.push_back(make_star(req, sw, 0, Money(), objective));
      return out;
    }
    // Blades reach an external switch only through pass-through panels.
    if (!b->pass_through_cost) return out;
    std::int64_t enclosures = ceil_div(n, b->enclosure_capacity);
    std::set<std::string> seen;
    for (const auto* set : {&cat.edge_set, &cat.core_set}) {
      for (const auto& sw : *set) {
        if (sw.blade_embedded || sw.ports < n || !seen.insert(sw.id()).second) continue;
        out.push_back(make_star(req, sw, n, enclosures * *b->pass_through_cost, objective));
      }
    }
    return out;
  }
  std::set<std::string> seen;
  for (const auto* set : {&cat.edge_set, &cat.core_set}) {
    for (const auto& sw : *set) {
      if (sw.blade_embedded || sw.ports < n || !seen.insert(sw.id()).second) continue;
      out.push_back(make_star(req, sw, n, Money(), objective));
    }
  }
  return out;
}

inline std::optional<FatTreeDesign> best_passing(std::vector<FatTreeDesign> candidates, const ConstraintSet& c) {
  std::optional<FatTreeDesign> best;
  for (auto& d : candidates) {
    if (!check_constraints(d, c).empty()) continue;
    if (!best || ranks_before(d, *best)) best = std::move(d);
  }
  return best;
}

} // namespace detail

/// Two blade enclosures joined without a core layer. Empty unless exactly two
/// enclosures are needed and a constraint-passing arrangement exists.
inline std::optional<FatTreeDesign> trivial_direct_connect(const DesignRequest& req, const Catalog& cat,
                                                           const ObjectiveFn& objective = acquisition_cost) {
  if (!req.blade()) return std::nullopt;
  return detail::best_passing(detail::direct_connect_candidates(req, cat, objective), req.constraints);
}

/// Single switch with at least N ports; ties broken by fewer ports, then id.
inline std::optional<FatTreeDesign> trivial_star(const DesignRequest& req, const Catalog& cat,
                                                 const ObjectiveFn& objective = acquisition_cost) {
  auto all = detail::star_candidates(req, cat, objective);
  std::optional<FatTreeDesign> best;
  for (auto& d : all) {
    if (!check_constraints(d, req.constraints).empty()) continue;
    if (!best || std::make_tuple(d.objective, d.edge_config.ports, d.edge_config.id()) <
                     std::make_tuple(best->objective, best->edge_config.ports, best->edge_config.id()))
      best = std::move(d);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Main search
// ---------------------------------------------------------------------------

enum class DesignStatus { ok, infeasible, insufficient_radix };

inline const char* to_string(DesignStatus s) {
  switch (s) {
  case DesignStatus::ok: return "ok";
  case DesignStatus::infeasible: return "infeasible";
  case DesignStatus::insufficient_radix: return "insufficient_radix";
  }
  return "?";
}

struct RejectedCandidate {
  std::string label;
  std::vector<ConstraintViolation> violations;
};

struct DesignReport {
  DesignStatus status = DesignStatus::ok;
  std::string message;
  std::optional<FatTreeDesign> winner;
  std::vector<FatTreeDesign> candidates; // feasible, ranked best first
  std::optional<std::int64_t> f1;        // direct connect
  std::optional<std::int64_t> f2;        // star
  std::optional<std::int64_t> f3;        // two-layer fat-tree
  std::vector<RejectedCandidate> rejected;
  std::vector<std::string> binding_constraints;
  std::int64_t largest_achievable_nodes = 0;

  bool ok() const { return status == DesignStatus::ok; }
};

struct DesignOptions {
  ObjectiveFn objective = acquisition_cost;
};

/// Every structurally valid candidate: trivial cases plus the edge x core loop,
/// including uniform-distribution variants. Also returns the largest node count
/// any of them could reach.
inline std::vector<FatTreeDesign> enumerate_candidates(const DesignRequest& req, const Catalog& cat,
                                                       const DesignOptions& opts, std::int64_t* largest = nullptr) {
  std::vector<FatTreeDesign> out;
  std::int64_t best_reach = 0;
  const ObjectiveFn& objective = opts.objective;

  for (auto& d : detail::direct_connect_candidates(req, cat, objective)) {
    best_reach = std::max(best_reach, d.max_supported_nodes);
    out.push_back(std::move(d));
  }
  for (auto& d : detail::star_candidates(req, cat, objective)) out.push_back(std::move(d));
  for (const auto* set : {&cat.edge_set, &cat.core_set}) {
    for (const auto& sw : *set) {
      if (detail::usable_for(sw, req) && !sw.blade_embedded) best_reach = std::max<std::int64_t>(best_reach, sw.ports);
    }
  }

  std::vector<SwitchConfig> edges;
  if (req.blade()) {
    edges.push_back(detail::embedded_switch(req, cat));
  } else {
    for (const auto& e : cat.edge_set) {
      if (detail::usable_for(e, req)) edges.push_back(e);
    }
  }

  for (const auto& edge : edges) {
    auto split = edge_port_split(edge.ports, req.blocking_factor);
    if (!split) continue;
    int per_edge = split->ports_to_nodes;
    if (const auto* b = req.blade()) {
      // One embedded switch per enclosure; it must serve a full enclosure.
      if (split->ports_to_nodes < std::min(b->enclosure_capacity, req.node_count)) continue;
      per_edge = b->enclosure_capacity;
    }
    int edges_needed = edge_count(req.node_count, per_edge);
    for (const auto& core : cat.core_set) {
      if (!detail::usable_for(core, req) || core.blade_embedded) continue;
      best_reach = std::max(best_reach, static_cast<std::int64_t>(core.ports) * per_edge);
      auto stage = core_stage(edges_needed, split->ports_to_core, core.ports);
      if (!stage) continue;
      out.push_back(make_fat_tree(req, edge, core, *split, edges_needed, *stage, per_edge, split->ports_to_core,
                                  false, objective));
      if (req.blade()) continue;
      auto uniform = uniform_distribution_variant(req.node_count, edges_needed, req.blocking_factor, edge.ports,
                                                  core.ports, *stage, req.prefer_expandability);
      if (uniform) {
        out.push_back(make_fat_tree(req, edge, core, *split, edges_needed, uniform->core, uniform->nodes_per_edge,
                                    uniform->uplinks_per_edge, true, objective));
      }
    }
  }
  if (largest) *largest = best_reach;
  return out;
}

inline DesignReport design(const DesignRequest& req, const Catalog& cat, const DesignOptions& opts = {}) {
  req.validate();
  DesignReport report;
  auto all = enumerate_candidates(req, cat, opts, &report.largest_achievable_nodes);

  if (all.empty()) {
    report.status = DesignStatus::insufficient_radix;
    report.message = "insufficient radix: no switch combination reaches " + std::to_string(req.node_count) +
                     " nodes; largest achievable N is " + std::to_string(report.largest_achievable_nodes);
    return report;
  }

  std::set<std::string> binding;
  for (auto& d : all) {
    auto violations = check_constraints(d, req.constraints);
    if (!violations.empty()) {
      for (const auto& v : violations) binding.insert(v.constraint);
      report.rejected.push_back({d.label(), std::move(violations)});
      continue;
    }
    std::optional<std::int64_t>* slot = d.kind == TopologyKind::direct_connect ? &report.f1
                                        : d.kind == TopologyKind::star         ? &report.f2
                                                                               : &report.f3;
    if (!*slot || d.objective < **slot) *slot = d.objective;
    report.candidates.push_back(std::move(d));
  }
  report.binding_constraints.assign(binding.begin(), binding.end());

  if (report.candidates.empty()) {
    report.status = DesignStatus::infeasible;
    std::string names;
    for (const auto& b : report.binding_constraints) names += (names.empty() ? "" : ", ") + b;
    report.message = "infeasible: every candidate violates a constraint (" + names + ")";
    return report;
  }

  std::sort(report.candidates.begin(), report.candidates.end(), ranks_before);
  report.winner = report.candidates.front();
  report.status = DesignStatus::ok;
  return report;
}

} // namespace fattree
