#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fattree/catalog.hpp"
#include "fattree/designer.hpp"
#include "fattree/estimator.hpp"
#include "fattree/expansion.hpp"

namespace fattree {

using ordered_json = nlohmann::ordered_json;

/// Network cost divided by node count, rounded to whole currency units.
inline std::int64_t cost_per_node_major(const FatTreeDesign& d) {
  return (Rational(d.metrics.cost.value, d.node_count) / Rational(kMinorPerMajor)).round();
}

/// Network plus compute nodes plus enclosures; empty when no node price is known.
inline std::optional<Money> cluster_cost(const FatTreeDesign& d, const DesignRequest& req) {
  if (const auto* b = req.blade()) {
    if (!b->node_cost) return std::nullopt;
    std::int64_t enclosures = ceil_div(req.node_count, b->enclosure_capacity);
    return d.metrics.cost + req.node_count * *b->node_cost + enclosures * b->enclosure_cost;
  }
  const auto* r = req.rack_mounted();
  if (!r->node_cost) return std::nullopt;
  return d.metrics.cost + req.node_count * *r->node_cost;
}

inline ordered_json config_json(const SwitchConfig& c) {
  ordered_json j;
  j["id"] = c.id();
  j["ports"] = c.ports;
  j["cost"] = c.cost.value;
  j["power_w"] = format_watts(c.power);
  j["rack_units"] = c.rack_units;
  if (c.configured_line_cards) j["line_cards"] = *c.configured_line_cards;
  j["expandable_ports"] = c.expandable_ports;
  return j;
}

inline ordered_json design_json(const FatTreeDesign& d, const DesignRequest* req = nullptr) {
  ordered_json j;
  j["kind"] = to_string(d.kind);
  j["nodes"] = d.node_count;
  j["edge_config"] = config_json(d.edge_config);
  j["core_config"] = d.core_config ? config_json(*d.core_config) : ordered_json();
  j["E"] = d.edge_count();
  j["C"] = d.core_count();
  j["B"] = d.core.bundle_width;
  j["L"] = d.cable_count;
  j["P_En"] = d.split.ports_to_nodes;
  j["P_Ec"] = d.split.ports_to_core;
  j["nodes_per_edge"] = d.nodes_per_edge;
  j["uplinks_per_edge"] = d.uplinks_per_edge;
  j["resulting_blocking"] = d.split.resulting_blocking.to_string();
  j["uniform_distribution"] = d.uniform_distribution;
  j["pass_through"] = d.pass_through;
  j["max_supported_nodes"] = d.max_supported_nodes;
  j["spare_core_ports"] = d.spare_core_ports();
  ordered_json costs;
  costs["edge_switches"] = (d.edge_count() * d.edge_config.cost).value;
  costs["core_switches"] = d.core_config ? (d.core_count() * d.core_config->cost).value : 0;
  costs["pass_through"] = d.metrics.pass_through_cost.value;
  costs["cables"] = d.metrics.cable_cost.value;
  costs["total"] = d.metrics.cost.value;
  costs["per_node_rounded"] = cost_per_node_major(d) * kMinorPerMajor;
  if (req) {
    if (auto c = cluster_cost(d, *req)) costs["cluster_total"] = c->value;
  }
  j["costs"] = costs;
  j["power_w"] = format_watts(d.metrics.power);
  j["rack_units"] = d.metrics.rack_units;
  j["weight_kg"] = format_kg(d.metrics.weight);
  j["objective"] = d.objective;
  return j;
}

inline ordered_json request_json(const DesignRequest& req) {
  ordered_json j;
  j["node_count"] = req.node_count;
  j["blocking_factor"] = req.blocking_factor.to_string();
  j["form_factor"] = req.blade() ? "blade" : "rack_mounted";
  j["avg_cable_cost"] = req.avg_cable_cost.value;
  j["prefer_expandability"] = req.prefer_expandability;
  ordered_json c = ordered_json::object();
  const auto& cs = req.constraints;
  if (cs.max_network_rack_units) c["max_network_rack_units"] = *cs.max_network_rack_units;
  if (cs.min_spare_core_ports) c["min_spare_core_ports"] = *cs.min_spare_core_ports;
  if (cs.max_network_power) c["max_network_power_w"] = format_watts(*cs.max_network_power);
  if (cs.max_network_cost) c["max_network_cost"] = cs.max_network_cost->value;
  j["constraints"] = c;
  return j;
}

inline ordered_json report_json(const DesignReport& r, const DesignRequest& req, const Catalog& cat, int top) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["message"] = r.message;
  j["currency"] = cat.currency;
  j["request"] = request_json(req);
  j["winner"] = r.winner ? design_json(*r.winner, &req) : ordered_json();
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? ordered_json(*v) : ordered_json(); };
  j["f1_direct_connect"] = opt(r.f1);
  j["f2_star"] = opt(r.f2);
  j["f3_fat_tree"] = opt(r.f3);
  j["candidate_count"] = r.candidates.size();
  ordered_json ranked = ordered_json::array();
  for (std::size_t i = 0; i < r.candidates.size() && static_cast<int>(i) < top; ++i) {
    auto c = design_json(r.candidates[i], &req);
    c["rank"] = i + 1;
    ranked.push_back(std::move(c));
  }
  j["candidates"] = ranked;
  ordered_json rejected = ordered_json::array();
  for (const auto& rc : r.rejected) {
    ordered_json v = ordered_json::array();
    for (const auto& x : rc.violations)
      v.push_back({{"constraint", x.constraint}, {"limit", x.limit}, {"actual", x.actual}, {"unit", x.unit}});
    rejected.push_back({{"candidate", rc.label}, {"violations", v}});
  }
  j["rejected"] = rejected;
  j["binding_constraints"] = r.binding_constraints;
  j["largest_achievable_nodes"] = r.largest_achievable_nodes;
  return j;
}

inline std::string design_line(const FatTreeDesign& d) {
  std::ostringstream os;
  os << d.label() << "  E=" << d.edge_count() << " C=" << d.core_count() << " B=" << d.core.bundle_width
     << " L=" << d.cable_count << " P_En=" << d.split.ports_to_nodes << " P_Ec=" << d.split.ports_to_core
     << " Bl_r=" << d.split.resulting_blocking.to_string() << "  total=" << format_money(d.metrics.cost);
  return os.str();
}

inline std::string report_text(const DesignReport& r, const DesignRequest& req, const Catalog& cat, int top) {
  std::ostringstream os;
  os << "status: " << to_string(r.status) << "\n";
  if (!r.message.empty()) os << "message: " << r.message << "\n";
  os << "request: N=" << req.node_count << " Bl=" << req.blocking_factor.to_string()
     << " form_factor=" << (req.blade() ? "blade" : "rack_mounted")
     << " cable=" << format_money(req.avg_cable_cost) << " " << cat.currency << "\n";
  if (r.winner) {
    const auto& w = *r.winner;
    os << "winner: " << w.label() << "\n";
    os << "  E=" << w.edge_count() << " C=" << w.core_count() << " B=" << w.core.bundle_width
       << " L=" << w.cable_count << " P_En=" << w.split.ports_to_nodes << " P_Ec=" << w.split.ports_to_core
       << " Bl_r=" << w.split.resulting_blocking.to_string() << " N_max=" << w.max_supported_nodes << "\n";
    os << "  switches=" << format_money(w.metrics.switch_cost);
    if (w.metrics.pass_through_cost.value) os << " pass_through=" << format_money(w.metrics.pass_through_cost);
    os << " cables=" << format_money(w.metrics.cable_cost) << " total=" << format_money(w.metrics.cost) << " "
       << cat.currency << " per_node=" << cost_per_node_major(w) << "\n";
    if (auto c = cluster_cost(w, req)) os << "  cluster_total=" << format_money(*c) << " " << cat.currency << "\n";
    os << "  power=" << format_watts(w.metrics.power) << " W rack_units=" << w.metrics.rack_units
       << " U weight=" << format_kg(w.metrics.weight) << " kg spare_core_ports=" << w.spare_core_ports() << "\n";
  }
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  os << "objective: f1=" << opt(r.f1) << " f2=" << opt(r.f2) << " f3=" << opt(r.f3) << "\n";
  if (!r.candidates.empty()) {
    int shown = std::min<int>(top, static_cast<int>(r.candidates.size()));
    os << "ranked candidates (" << shown << " of " << r.candidates.size() << "):\n";
    for (int i = 0; i < shown; ++i) os << "  " << (i + 1) << ". " << design_line(r.candidates[i]) << "\n";
  }
  if (!r.rejected.empty()) {
    os << "rejected by constraints: " << r.rejected.size() << "\n";
    for (const auto& rc : r.rejected) {
      os << "  " << rc.label << ":";
      for (const auto& v : rc.violations) os << " [" << v.describe() << "]";
      os << "\n";
    }
  }
  return os.str();
}

inline ordered_json per_port_json(const PerPortMetrics& m) {
  auto rat = [](const Rational& r, int places) {
    return ordered_json{{"exact", r.to_string()}, {"decimal", r.to_decimal(places)}};
  };
  ordered_json j;
  j["cost_minor_units"] = rat(m.cost, 2);
  j["power_mw"] = rat(m.power, 3);
  j["rack_units"] = rat(m.rack_units, 6);
  j["weight_g"] = rat(m.weight, 3);
  return j;
}

inline ordered_json estimate_json(const PerPortEstimate& e, const SwitchConfig& config) {
  ordered_json j;
  j["switch"] = config.id();
  j["nodes"] = e.node_count;
  j["total_ports"] = e.total_ports;
  j["per_port"] = per_port_json(e.per_port);
  j["est_switch_cost"] = e.est_switch_cost.value;
  j["est_cable_count"] = e.est_cable_count;
  j["est_cable_cost"] = e.est_cable_cost.value;
  j["est_cost"] = e.est_cost.value;
  j["est_power_w"] = format_watts(e.est_power);
  j["est_rack_units"] = {{"exact", e.est_rack_units.to_string()}, {"decimal", e.est_rack_units.to_decimal(3)}};
  j["est_weight_kg"] = format_kg(e.est_weight);
  j["exact"] = e.exact;
  j["bundle_factor"] = e.bundle_factor ? ordered_json(*e.bundle_factor) : ordered_json();
  return j;
}

inline std::string estimate_text(const PerPortEstimate& e, const SwitchConfig& config, const std::string& currency) {
  std::ostringstream os;
  os << "switch: " << config.id() << " (" << config.ports << " ports)\n";
  os << "nodes: " << e.node_count << "  ports counted: " << e.total_ports << "\n";
  os << "per port: cost=" << (e.per_port.cost / Rational(kMinorPerMajor)).to_decimal(2) << " " << currency
     << " power=" << (e.per_port.power / Rational(kMilli)).to_decimal(3) << " W rack_units="
     << e.per_port.rack_units.to_string() << " weight=" << (e.per_port.weight / Rational(kMilli)).to_decimal(3)
     << " kg\n";
  os << "estimate: switches=" << format_money(e.est_switch_cost) << " cables=" << format_money(e.est_cable_cost)
     << " (" << e.est_cable_count << ") total=" << format_money(e.est_cost) << " " << currency << "\n";
  os << "          power=" << format_watts(e.est_power) << " W rack_units=" << e.est_rack_units.to_decimal(3)
     << " U weight=" << format_kg(e.est_weight) << " kg\n";
  os << "exact: " << (e.exact ? "yes" : "no");
  if (e.bundle_factor) os << " (bundle factor X=" << *e.bundle_factor << ")";
  os << "\n";
  return os.str();
}

inline ordered_json audit_json(const ExpansionAudit& a) {
  ordered_json j;
  j["via_spare_edge_ports"] = a.via_spare_edge_ports;
  j["new_edge_switches"] = a.new_edge_switches;
  j["via_new_edge_switches"] = a.via_new_edge_switches;
  j["max_added_nodes"] = a.max_added_nodes;
  j["used_units"] = a.used_units;
  j["wasted_units"] = a.wasted_units;
  j["free_core_ports_before"] = a.free_core_ports_before;
  j["free_core_ports_after"] = a.free_core_ports_after;
  return j;
}

inline ordered_json variant_json(const InstallVariant& v) {
  ordered_json phases = ordered_json::array();
  for (const auto& p : v.phases)
    phases.push_back({{"nodes", p.nodes},
                      {"edge_switches", p.edge_switches},
                      {"core_switches", p.core_switches},
                      {"rack_units", p.rack_units}});
  return {{"name", v.name}, {"initial_nodes", v.initial_nodes()}, {"phases", phases}};
}

inline ordered_json plan_json(const ExpansionPlan& p) {
  ordered_json j;
  j["current_capacity_units"] = p.current_capacity_units;
  j["target_capacity_units"] = p.target_capacity_units;
  ordered_json base;
  base["nodes"] = p.baseline.node_count;
  base["E"] = p.baseline.edge_count();
  base["C"] = p.baseline.core_count();
  base["switch_units"] = p.baseline.metrics.rack_units;
  base["audit"] = audit_json(p.baseline_audit);
  base["total_after_naive_expansion"] = p.baseline.node_count + p.baseline_audit.max_added_nodes;
  j["baseline"] = base;
  ordered_json t;
  t["target_max_nodes"] = p.target_max_nodes;
  t["E"] = p.target.edge_count();
  t["C"] = p.target.core_count();
  t["switch_units"] = p.switch_units;
  t["core_switches_upfront"] = p.core_switches_upfront;
  t["spare_core_ports"] = p.spare_core_ports;
  j["expandable"] = t;
  j["variants"] = {variant_json(p.all_upfront), variant_json(p.core_upfront)};
  return j;
}

inline std::string plan_text(const ExpansionPlan& p) {
  std::ostringstream os;
  const auto& b = p.baseline;
  const auto& a = p.baseline_audit;
  os << "capacity: " << p.current_capacity_units << " U now, " << p.target_capacity_units << " U later\n";
  os << "non-expandable baseline: N=" << b.node_count << " E=" << b.edge_count() << " C=" << b.core_count()
     << " (" << b.metrics.rack_units << " U of switches)\n";
  os << "  naive expansion: +" << a.via_spare_edge_ports << " on spare edge ports, +" << a.via_new_edge_switches
     << " on " << a.new_edge_switches << " new edge switch(es) -> N=" << b.node_count + a.max_added_nodes << ", "
     << a.wasted_units << " U wasted\n";
  os << "expandable design: N=" << p.target_max_nodes << " E=" << p.target.edge_count()
     << " C=" << p.target.core_count() << " (" << p.switch_units << " U of switches, " << p.spare_core_ports
     << " spare core ports)\n";
  for (const auto* v : {&p.all_upfront, &p.core_upfront}) {
    const auto& first = v->phases.front();
    os << "  " << v->name << ": initial N=" << first.nodes << " with E=" << first.edge_switches
       << " C=" << first.core_switches << ", later +" << (v->phases.back().nodes - first.nodes) << " nodes and +"
       << (v->phases.back().edge_switches - first.edge_switches) << " edge switches\n";
  }
  return os.str();
}

} // namespace fattree
