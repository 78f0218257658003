#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fattree/catalog.hpp"
#include "fattree/designer.hpp"
#include "fattree/error.hpp"
#include "fattree/estimator.hpp"
#include "fattree/expansion.hpp"
#include "fattree/placement.hpp"
#include "fattree/rack_view.hpp"
#include "fattree/report.hpp"
#include "fattree/request_io.hpp"
#include "fattree/sweep.hpp"
#include "fattree/wiring.hpp"

namespace fattree::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInfeasible = 2;

class IoError : public Error {
public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("cannot write '" + path + "'");
}

inline Money money_flag(const std::string& text, const char* flag) {
  auto m = parse_money(text);
  if (!m) throw ValidationError(flag, "expected a non-negative amount with at most 2 decimals, got '" + text + "'");
  return *m;
}

inline Power power_flag(const std::string& text, const char* flag) {
  auto p = parse_watts(text);
  if (!p) throw ValidationError(flag, "expected watts with at most 3 decimals, got '" + text + "'");
  return *p;
}

inline Weight weight_flag(const std::string& text, const char* flag) {
  auto w = parse_kg(text);
  if (!w) throw ValidationError(flag, "expected kilograms with at most 3 decimals, got '" + text + "'");
  return *w;
}

/// Catalog and request flags shared by design, sweep, place and expand.
struct RequestFlags {
  std::string catalog_path;
  bool star_only = false;
  std::string request_path;
  int nodes = 0;
  std::string blocking = "1";
  bool blade = false;
  int enclosure_capacity = 16;
  std::string enclosure_cost = "0";
  std::string embedded_switch;
  std::string pass_through_cost;
  std::string node_cost;
  int node_ru = 1;
  std::string node_power = "0";
  std::string node_weight = "0";
  std::string cable_cost = "80";
  std::optional<std::int64_t> max_ru;
  std::optional<std::int64_t> min_spare_ports;
  std::string max_power;
  std::string max_cost;
  bool prefer_expandability = false;

  CLI::Option* nodes_opt = nullptr;
  CLI::Option* blocking_opt = nullptr;
  CLI::Option* cable_opt = nullptr;
  CLI::Option* node_ru_opt = nullptr;
  CLI::Option* node_power_opt = nullptr;
  CLI::Option* node_weight_opt = nullptr;
  CLI::Option* node_cost_opt = nullptr;

  void add(CLI::App* app, bool with_nodes, bool with_blade) {
    app->add_option("--catalog", catalog_path, "Switch catalog JSON file")->required();
    app->add_flag("--star-only", star_only, "Accept a catalog without edge or core switches");
    app->add_option("--request", request_path, "Request JSON file; explicit flags override its fields");
    if (with_nodes) nodes_opt = app->add_option("--nodes", nodes, "Number of compute nodes");
    blocking_opt = app->add_option("--blocking", blocking, "Blocking factor, integer or p/q");
    if (with_blade) {
      app->add_flag("--blade", blade, "Nodes are blades in enclosures with embedded edge switches");
      app->add_option("--enclosure-capacity", enclosure_capacity, "Blades per enclosure");
      app->add_option("--enclosure-cost", enclosure_cost, "Price of one enclosure");
      app->add_option("--embedded-switch", embedded_switch, "Catalog id of the embedded edge switch");
      app->add_option("--pass-through-cost", pass_through_cost, "Price of a pass-through panel");
    }
    node_cost_opt = app->add_option("--node-cost", node_cost, "Price of one compute node");
    node_ru_opt = app->add_option("--node-ru", node_ru, "Rack units per rack-mounted node");
    node_power_opt = app->add_option("--node-power", node_power, "Watts per rack-mounted node");
    node_weight_opt = app->add_option("--node-weight", node_weight, "Kilograms per rack-mounted node");
    cable_opt = app->add_option("--cable-cost", cable_cost, "Average price of one cable");
    app->add_option("--max-ru", max_ru, "Rack-unit budget for network equipment");
    app->add_option("--min-spare-ports", min_spare_ports, "Minimum spare core ports");
    app->add_option("--max-power", max_power, "Power budget for network equipment, watts");
    app->add_option("--max-cost", max_cost, "Cost budget for network equipment");
    app->add_flag("--prefer-expandability", prefer_expandability,
                  "Keep the full core layer instead of the uniform-distribution variant");
  }

  Catalog load_catalog_file() const {
    return load_catalog(std::string_view(read_file(catalog_path)), CatalogLoadOptions{star_only});
  }

  DesignRequest build(bool need_nodes) const {
    DesignRequest req;
    bool from_file = !request_path.empty();
    if (from_file) req = load_request(std::string_view(read_file(request_path)));
    if (nodes_opt && nodes_opt->count()) {
      req.node_count = nodes;
    } else if (need_nodes && !from_file) {
      throw ValidationError("--nodes", "required");
    }
    if (blocking_opt->count() || !from_file) {
      auto b = Rational::parse(blocking);
      if (!b || *b <= Rational(0))
        throw ValidationError("--blocking", "expected a positive integer or p/q rational, got '" + blocking + "'");
      req.blocking_factor = *b;
    }
    if (blade) {
      BladeEnclosures b;
      b.enclosure_capacity = enclosure_capacity;
      b.enclosure_cost = money_flag(enclosure_cost, "--enclosure-cost");
      b.embedded_edge_switch_id = embedded_switch;
      if (embedded_switch.empty()) throw ValidationError("--embedded-switch", "required with --blade");
      if (!pass_through_cost.empty()) b.pass_through_cost = money_flag(pass_through_cost, "--pass-through-cost");
      if (!node_cost.empty()) b.node_cost = money_flag(node_cost, "--node-cost");
      req.form_factor = b;
    } else if (auto* r = std::get_if<RackMountedNodes>(&req.form_factor)) {
      if (node_ru_opt->count()) r->node_rack_units = node_ru;
      if (node_power_opt->count()) r->node_power = power_flag(node_power, "--node-power");
      if (node_weight_opt->count()) r->node_weight = weight_flag(node_weight, "--node-weight");
      if (node_cost_opt->count()) r->node_cost = money_flag(node_cost, "--node-cost");
    } else if (auto* b = std::get_if<BladeEnclosures>(&req.form_factor)) {
      if (node_cost_opt->count()) b->node_cost = money_flag(node_cost, "--node-cost");
    }
    if (cable_opt->count() || !from_file) req.avg_cable_cost = money_flag(cable_cost, "--cable-cost");
    auto& c = req.constraints;
    if (max_ru) c.max_network_rack_units = *max_ru;
    if (min_spare_ports) c.min_spare_core_ports = *min_spare_ports;
    if (!max_power.empty()) c.max_network_power = power_flag(max_power, "--max-power");
    if (!max_cost.empty()) c.max_network_cost = money_flag(max_cost, "--max-cost");
    if (prefer_expandability) req.prefer_expandability = true;
    req.validate();
    return req;
  }
};

inline const SwitchConfig& find_switch(const Catalog& cat, const std::string& id) {
  if (id.empty()) {
    std::set<std::string> ids;
    for (const auto* set : {&cat.edge_set, &cat.core_set})
      for (const auto& c : *set) ids.insert(c.id());
    if (ids.size() != 1) throw ValidationError("--switch", "required when the catalog has more than one switch");
    return *cat.find(*ids.begin());
  }
  const SwitchConfig* sw = cat.find(id);
  if (!sw) throw ValidationError("--switch", "'" + id + "' is not in the catalog");
  return *sw;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-layer fat-tree network designer"};
  app.name("fattree");
  app.require_subcommand(1);

  // design
  auto* design_cmd = app.add_subcommand("design", "Find the cheapest network for N nodes");
  RequestFlags design_flags;
  design_flags.add(design_cmd, true, true);
  int top = 5;
  std::string design_format = "json";
  std::string dot_path;
  design_cmd->add_option("--top", top, "Ranked alternatives to list")->check(CLI::NonNegativeNumber);
  design_cmd->add_option("--format", design_format, "Output format")->check(CLI::IsMember({"json", "text"}));
  design_cmd->add_option("--dot", dot_path, "Write the winner's wiring diagram (DOT) to FILE");

  // estimate
  auto* estimate_cmd = app.add_subcommand("estimate", "Per-port lower-bound estimate");
  std::string est_catalog;
  bool est_star_only = false;
  int est_nodes = 0;
  std::string est_switch;
  std::string est_rounding = "exact";
  bool est_blade = false;
  std::string est_cable = "80";
  std::string est_format = "json";
  estimate_cmd->add_option("--catalog", est_catalog, "Switch catalog JSON file")->required();
  estimate_cmd->add_flag("--star-only", est_star_only, "Accept a catalog without edge or core switches");
  estimate_cmd->add_option("--nodes", est_nodes, "Number of compute nodes")->required();
  estimate_cmd->add_option("--switch", est_switch, "Catalog id of the switch");
  estimate_cmd->add_option("--rounding", est_rounding, "Per-port rounding")->check(CLI::IsMember({"exact", "quoted"}));
  estimate_cmd->add_flag("--blade", est_blade, "Count cables for blade nodes");
  estimate_cmd->add_option("--cable-cost", est_cable, "Average price of one cable");
  estimate_cmd->add_option("--format", est_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimate against actual design cost over a node range");
  RequestFlags sweep_flags;
  sweep_flags.add(sweep_cmd, false, false);
  int sweep_from = 2;
  int sweep_to = 160;
  std::string sweep_switch;
  std::string sweep_format = "text";
  sweep_cmd->add_option("--from", sweep_from, "First node count");
  sweep_cmd->add_option("--to", sweep_to, "Last node count");
  sweep_cmd->add_option("--switch", sweep_switch, "Catalog id of the estimating switch");
  sweep_cmd->add_option("--format", sweep_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // place
  auto* place_cmd = app.add_subcommand("place", "Design the network and lay it out in racks");
  RequestFlags place_flags;
  place_flags.add(place_cmd, true, false);
  int rows = 1;
  int racks_per_row = 12;
  int rack_units = 42;
  std::string rack_weight;
  std::string rack_power;
  bool dense = false;
  std::string core_policy = "first";
  int core_groups = 1;
  std::vector<std::string> reserve;
  std::string place_format = "json";
  place_cmd->add_option("--rows", rows, "Rows of racks");
  place_cmd->add_option("--racks-per-row", racks_per_row, "Racks per row");
  place_cmd->add_option("--rack-units", rack_units, "Units per rack");
  place_cmd->add_option("--rack-weight", rack_weight, "Weight budget per rack, kilograms");
  place_cmd->add_option("--rack-power", rack_power, "Power and cooling budget per rack, watts");
  place_cmd->add_flag("--dense", dense, "Spread building blocks to fill gaps");
  place_cmd->add_option("--core-policy", core_policy, "Core switch placement")
      ->check(CLI::IsMember({"first", "center", "distributed"}));
  place_cmd->add_option("--core-groups", core_groups, "Contiguous groups of core switches")
      ->check(CLI::PositiveNumber);
  place_cmd->add_option("--reserve", reserve, "Reserved space LABEL:UNITS (repeatable)");
  place_cmd->add_option("--format", place_format, "Output format")->check(CLI::IsMember({"json", "ascii", "svg"}));

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "Plan a network that grows with the machine room");
  RequestFlags expand_flags;
  expand_flags.add(expand_cmd, false, false);
  int current_ru = 0;
  int target_ru = 0;
  std::string expand_format = "json";
  expand_cmd->add_option("--current-ru", current_ru, "Rack units available now")->required();
  expand_cmd->add_option("--target-ru", target_ru, "Rack units available after expansion")->required();
  expand_cmd->add_option("--format", expand_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (design_cmd->parsed()) {
      Catalog cat = design_flags.load_catalog_file();
      DesignRequest req = design_flags.build(true);
      DesignReport report = design(req, cat);
      if (design_format == "json")
        out << report_json(report, req, cat, top).dump(2) << "\n";
      else
        out << report_text(report, req, cat, top);
      if (!dot_path.empty() && report.winner) write_file(dot_path, emit_wiring(*report.winner));
      if (!report.ok()) {
        err << "fattree: " << report.message << "\n";
        return kInfeasible;
      }
      return kOk;
    }

    if (estimate_cmd->parsed()) {
      Catalog cat = load_catalog(std::string_view(read_file(est_catalog)), CatalogLoadOptions{est_star_only});
      const SwitchConfig& sw = find_switch(cat, est_switch);
      auto rounding = est_rounding == "quoted" ? PerPortRounding::quoted : PerPortRounding::exact;
      auto e = lower_bound_estimate(est_nodes, sw, money_flag(est_cable, "--cable-cost"), est_blade, rounding);
      if (est_format == "json")
        out << estimate_json(e, sw).dump(2) << "\n";
      else
        out << estimate_text(e, sw, cat.currency);
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      Catalog cat = sweep_flags.load_catalog_file();
      DesignRequest base = sweep_flags.build(false);
      const SwitchConfig& sw = find_switch(cat, sweep_switch);
      Sweep s = run_sweep(sweep_from, sweep_to, base, cat, sw);
      if (sweep_format == "json")
        out << sweep_json(s).dump(2) << "\n";
      else
        out << sweep_text(s);
      return kOk;
    }

    if (place_cmd->parsed()) {
      Catalog cat = place_flags.load_catalog_file();
      DesignRequest req = place_flags.build(true);
      const auto* rack = req.rack_mounted();
      if (!rack) throw ValidationError("form_factor", "placement needs rack-mounted nodes");
      DesignReport report = design(req, cat);
      if (!report.ok()) {
        err << "fattree: " << report.message << "\n";
        return kInfeasible;
      }
      RoomSpec room;
      room.rows = rows;
      room.racks_per_row = racks_per_row;
      room.rack_units_per_rack = rack_units;
      if (!rack_weight.empty()) room.rack_weight_budget = weight_flag(rack_weight, "--rack-weight");
      if (!rack_power.empty()) room.rack_power_budget = power_flag(rack_power, "--rack-power");
      PlacementOptions opts;
      opts.dense = dense;
      opts.core_policy = core_policy == "center"        ? CorePlacement::center
                         : core_policy == "distributed" ? CorePlacement::distributed
                                                        : CorePlacement::first_racks_contiguous;
      opts.core_groups = core_groups;
      for (const auto& r : reserve) {
        auto colon = r.rfind(':');
        int units = 0;
        if (colon == std::string::npos || colon == 0) throw ValidationError("--reserve", "expected LABEL:UNITS, got '" + r + "'");
        try {
          std::size_t used = 0;
          units = std::stoi(r.substr(colon + 1), &used);
          if (used != r.size() - colon - 1 || units < 1) throw std::invalid_argument("units");
        } catch (const std::exception&) {
          throw ValidationError("--reserve", "expected LABEL:UNITS, got '" + r + "'");
        }
        opts.reserved.push_back({r.substr(0, colon), units, Weight(), Power()});
      }
      NodeSpec node{rack->node_rack_units, rack->node_power, rack->node_weight};
      RackLayout layout = plan_racks(*report.winner, room, node, opts);
      if (place_format == "json") {
        auto j = layout_json(layout);
        j["design"] = design_json(*report.winner, &req);
        out << j.dump(2) << "\n";
      } else if (place_format == "svg") {
        out << layout_svg(layout);
      } else {
        out << layout_ascii(layout) << "\n" << layout_top_view(layout);
      }
      if (!layout.unplaced.empty()) {
        err << "fattree: " << layout.unplaced.size() << " item(s) could not be placed\n";
        return kInfeasible;
      }
      return kOk;
    }

    if (expand_cmd->parsed()) {
      Catalog cat = expand_flags.load_catalog_file();
      DesignRequest base = expand_flags.build(false);
      ExpansionPlan plan = expansion_plan(current_ru, target_ru, cat, base);
      if (expand_format == "json")
        out << plan_json(plan).dump(2) << "\n";
      else
        out << plan_text(plan);
      return kOk;
    }
  } catch (const RadixError& e) {
    err << "fattree: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InfeasibleError& e) {
    err << "fattree: " << e.what() << "\n";
    return kInfeasible;
  } catch (const Error& e) {
    err << "fattree: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace fattree::cli
