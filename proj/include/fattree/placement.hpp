#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fattree/designer.hpp"
#include "fattree/error.hpp"
#include "fattree/units.hpp"

namespace fattree {

struct RoomSpec {
  int rows = 1;
  int racks_per_row = 1;
  int rack_units_per_rack = 42;
  std::optional<Weight> rack_weight_budget; // unlimited when absent
  std::optional<Power> rack_power_budget;   // covers cooling as well

  int rack_count() const { return rows * racks_per_row; }
};

struct NodeSpec {
  int rack_units = 1;
  Power power;
  Weight weight;
};

/// Where core switches go. Which choice minimizes cable length is an open question.
enum class CorePlacement { first_racks_contiguous, center, distributed };

inline const char* to_string(CorePlacement p) {
  switch (p) {
  case CorePlacement::first_racks_contiguous: return "first_racks_contiguous";
  case CorePlacement::center: return "center";
  case CorePlacement::distributed: return "distributed";
  }
  return "?";
}

/// Indivisible equipment that is not part of the network (storage, PDUs, ...).
struct ReservedItem {
  std::string label;
  int rack_units = 1;
  Weight weight;
  Power power;
};

struct PlacementOptions {
  bool dense = false;
  CorePlacement core_policy = CorePlacement::first_racks_contiguous;
  // Monolithic core switches are installed in this many contiguous groups.
  int core_groups = 1;
  std::vector<ReservedItem> reserved;
};

enum class ItemKind { core_switch, edge_switch, node_block, reserved };

inline const char* to_string(ItemKind k) {
  switch (k) {
  case ItemKind::core_switch: return "core_switch";
  case ItemKind::edge_switch: return "edge_switch";
  case ItemKind::node_block: return "node_block";
  case ItemKind::reserved: return "reserved";
  }
  return "?";
}

struct PlacedItem {
  ItemKind kind = ItemKind::node_block;
  int position = 0; // lowest occupied unit, 0 = bottom of rack
  int rack_units = 0;
  int count = 1;    // switches or nodes in this contiguous run
  int block = -1;   // building block id (edge switch index) for edge switches and nodes
  int index = -1;   // core switch index, reserved item index
  Weight weight;
  Power power;
  std::string label;
};

struct Rack {
  int index = 0; // position in fill order
  int row = 0;
  int column = 0;
  int capacity = 42;
  std::vector<PlacedItem> items;
  int used_units = 0;
  Weight weight;
  Power power;
  // Nodes that still fit under all three budgets.
  int future_nodes = 0;

  bool used() const { return !items.empty(); }
};

struct RackLayout {
  std::vector<Rack> racks; // every rack of the room, in serpentine fill order
  std::vector<int> whole_blocks;
  std::vector<int> spread_blocks;
  std::vector<std::string> unplaced;
  std::optional<Weight> rack_weight_budget;
  std::optional<Power> rack_power_budget;
  int racks_per_row = 1;

  int racks_used() const {
    return static_cast<int>(std::count_if(racks.begin(), racks.end(), [](const Rack& r) { return r.used(); }));
  }

  std::int64_t count(ItemKind kind) const {
    std::int64_t n = 0;
    for (const auto& r : racks)
      for (const auto& it : r.items)
        if (it.kind == kind) n += it.count;
    return n;
  }
};

/// Serpentine order: left to right along even rows, right to left along odd rows.
inline std::pair<int, int> serpentine_position(int order, int racks_per_row) {
  int row = order / racks_per_row;
  int pos = order % racks_per_row;
  return {row, row % 2 == 0 ? pos : racks_per_row - 1 - pos};
}

namespace detail {

class RackPlanner {
public:
  RackPlanner(const RoomSpec& room, const NodeSpec& node) : room_(room), node_(node) {
    for (int k = 0; k < room.rack_count(); ++k) {
      State s;
      auto [row, col] = serpentine_position(k, room.racks_per_row);
      s.rack.index = k;
      s.rack.row = row;
      s.rack.column = col;
      s.rack.capacity = room.rack_units_per_rack;
      s.slots.assign(static_cast<std::size_t>(room.rack_units_per_rack), false);
      racks_.push_back(std::move(s));
    }
  }

  int size() const { return static_cast<int>(racks_.size()); }
  const Rack& rack(int k) const { return racks_[static_cast<std::size_t>(k)].rack; }

  bool budget_ok(int k, Weight w, Power p) const {
    const auto& r = rack(k);
    if (room_.rack_weight_budget && r.weight + w > *room_.rack_weight_budget) return false;
    if (room_.rack_power_budget && r.power + p > *room_.rack_power_budget) return false;
    return true;
  }

  std::optional<int> find_run(int k, int units, bool from_top) const {
    const auto& slots = racks_[static_cast<std::size_t>(k)].slots;
    int cap = static_cast<int>(slots.size());
    if (units > cap) return std::nullopt;
    if (!from_top) {
      for (int start = 0; start + units <= cap; ++start) {
        if (run_free(slots, start, units)) return start;
      }
    } else {
      for (int start = cap - units; start >= 0; --start) {
        if (run_free(slots, start, units)) return start;
      }
    }
    return std::nullopt;
  }

  bool fits(int k, int units, Weight w, Power p, bool from_top = false) const {
    return budget_ok(k, w, p) && find_run(k, units, from_top).has_value();
  }

  void put(int k, PlacedItem item, bool from_top) {
    auto& s = racks_[static_cast<std::size_t>(k)];
    auto pos = find_run(k, item.rack_units, from_top);
    item.position = *pos;
    for (int u = 0; u < item.rack_units; ++u) s.slots[static_cast<std::size_t>(*pos + u)] = true;
    s.rack.used_units += item.rack_units;
    s.rack.weight += item.weight;
    s.rack.power += item.power;
    // Merge with the run directly below when it belongs to the same block.
    if (item.kind == ItemKind::node_block) {
      for (auto& prev : s.rack.items) {
        if (prev.kind == ItemKind::node_block && prev.block == item.block &&
            prev.position + prev.rack_units == item.position) {
          prev.rack_units += item.rack_units;
          prev.count += item.count;
          prev.weight += item.weight;
          prev.power += item.power;
          return;
        }
      }
    }
    s.rack.items.push_back(std::move(item));
  }

  /// Switch on top, nodes from the bottom, all in rack k.
  bool place_block_whole(int k, int block, const SwitchConfig& sw, int nodes) {
    Weight w = sw.weight + nodes * node_.weight;
    Power p = sw.power + nodes * node_.power;
    if (!budget_ok(k, w, p)) return false;
    // Switch and nodes need disjoint runs; the simplest check is a trial on a copy.
    RackPlanner trial = *this;
    if (!trial.fits(k, sw.rack_units, sw.weight, sw.power, true)) return false;
    trial.put(k, edge_item(block, sw), true);
    for (int i = 0; i < nodes; ++i) {
      if (!trial.fits(k, node_.rack_units, node_.weight, node_.power)) return false;
      trial.put(k, node_item(block), false);
    }
    *this = std::move(trial);
    return true;
  }

  /// Spreads a block over racks [first, last]: nodes fill free space in fill
  /// order, the switch goes to the topmost free unit of the first rack that takes it.
  bool place_block_spread(int first, int last, int block, const SwitchConfig& sw, int nodes) {
    for (int host = first; host <= last; ++host) {
      RackPlanner trial = *this;
      if (!trial.fits(host, sw.rack_units, sw.weight, sw.power, true)) continue;
      trial.put(host, edge_item(block, sw), true);
      int left = nodes;
      for (int k = first; k <= last && left > 0; ++k) {
        while (left > 0 && trial.fits(k, node_.rack_units, node_.weight, node_.power)) {
          trial.put(k, node_item(block), false);
          --left;
        }
      }
      if (left == 0) {
        *this = std::move(trial);
        return true;
      }
    }
    return false;
  }

  PlacedItem edge_item(int block, const SwitchConfig& sw) const {
    PlacedItem it;
    it.kind = ItemKind::edge_switch;
    it.rack_units = sw.rack_units;
    it.block = block;
    it.weight = sw.weight;
    it.power = sw.power;
    it.label = sw.id();
    return it;
  }

  PlacedItem node_item(int block) const {
    PlacedItem it;
    it.kind = ItemKind::node_block;
    it.rack_units = node_.rack_units;
    it.block = block;
    it.weight = node_.weight;
    it.power = node_.power;
    return it;
  }

  std::vector<Rack> finish() const {
    std::vector<Rack> out;
    for (const auto& s : racks_) {
      Rack r = s.rack;
      std::sort(r.items.begin(), r.items.end(),
                [](const PlacedItem& a, const PlacedItem& b) { return a.position < b.position; });
      int by_space = (r.capacity - r.used_units) / node_.rack_units;
      int future = by_space;
      if (room_.rack_weight_budget && node_.weight.value > 0)
        future = std::min<std::int64_t>(future, (room_.rack_weight_budget->value - r.weight.value) / node_.weight.value);
      if (room_.rack_power_budget && node_.power.value > 0)
        future = std::min<std::int64_t>(future, (room_.rack_power_budget->value - r.power.value) / node_.power.value);
      r.future_nodes = std::max(0, future);
      out.push_back(std::move(r));
    }
    return out;
  }

private:
  struct State {
    Rack rack;
    std::vector<bool> slots;
  };

  static bool run_free(const std::vector<bool>& slots, int start, int units) {
    for (int u = start; u < start + units; ++u)
      if (slots[static_cast<std::size_t>(u)]) return false;
    return true;
  }

  RoomSpec room_;
  NodeSpec node_;
  std::vector<State> racks_;
};

} // namespace detail

/// Packs the design's equipment into the room: indivisible modular switches,
/// reserved items, core switches, then building blocks (an edge switch with its
/// nodes) in serpentine rack order.
inline RackLayout plan_racks(const FatTreeDesign& design, const RoomSpec& room, const NodeSpec& node,
                             const PlacementOptions& options = {}) {
  if (room.rows < 1 || room.racks_per_row < 1 || room.rack_units_per_rack < 1)
    throw ValidationError("room", "rows, racks_per_row and rack_units_per_rack must be positive");
  if (node.rack_units < 1) throw ValidationError("node.rack_units", "must be >= 1");
  if (design.edge_config.blade_embedded)
    throw ValidationError("design", "rack placement needs rack-mounted nodes, not blade enclosures");

  const SwitchConfig& edge = design.edge_config;
  const int cap = room.rack_units_per_rack;
  const int cores = design.core_count();

  // Totals against room capacity.
  std::int64_t units = static_cast<std::int64_t>(design.edge_count()) * edge.rack_units +
                       static_cast<std::int64_t>(design.node_count) * node.rack_units;
  Weight weight = design.edge_count() * edge.weight + design.node_count * node.weight;
  Power power = design.edge_count() * edge.power + design.node_count * node.power;
  if (design.core_config) {
    units += static_cast<std::int64_t>(cores) * design.core_config->rack_units;
    weight += cores * design.core_config->weight;
    power += cores * design.core_config->power;
  }
  for (const auto& r : options.reserved) {
    units += r.rack_units;
    weight += r.weight;
    power += r.power;
  }
  std::int64_t room_units = static_cast<std::int64_t>(room.rack_count()) * cap;
  std::string deficit;
  if (units > room_units) deficit += " " + std::to_string(units - room_units) + " U";
  if (room.rack_weight_budget && weight > room.rack_count() * *room.rack_weight_budget)
    deficit += " " + format_kg(weight - room.rack_count() * *room.rack_weight_budget) + " kg";
  if (room.rack_power_budget && power > room.rack_count() * *room.rack_power_budget)
    deficit += " " + format_watts(power - room.rack_count() * *room.rack_power_budget) + " W";
  if (!deficit.empty()) throw InfeasibleError("equipment exceeds room capacity, deficit:" + deficit);

  auto too_big = [&](int u, const std::string& what) {
    if (u > cap) throw InfeasibleError(what + " (" + std::to_string(u) + " U) is larger than a rack (" +
                                       std::to_string(cap) + " U)");
  };
  too_big(edge.rack_units, "edge switch " + edge.id());
  too_big(node.rack_units, "compute node");
  if (design.core_config) too_big(design.core_config->rack_units, "core switch " + design.core_config->id());
  for (const auto& r : options.reserved) too_big(r.rack_units, "reserved item '" + r.label + "'");

  detail::RackPlanner planner(room, node);
  RackLayout layout;
  layout.rack_weight_budget = room.rack_weight_budget;
  layout.rack_power_budget = room.rack_power_budget;
  layout.racks_per_row = room.racks_per_row;

  const int estimated_racks =
      std::clamp(static_cast<int>(ceil_div(units, cap)), 1, room.rack_count());
  auto start_rack = [&](int group, int groups) {
    switch (options.core_policy) {
    case CorePlacement::first_racks_contiguous: return group % room.rack_count();
    case CorePlacement::center: {
      int centre = (estimated_racks - 1) / 2;
      return std::clamp(centre - groups / 2 + group, 0, room.rack_count() - 1);
    }
    case CorePlacement::distributed: return (group * estimated_racks / groups) % room.rack_count();
    }
    return 0;
  };
  // First rack from `start` (wrapping) able to take `units` contiguous units.
  auto first_fit = [&](int start, int u, Weight w, Power p) -> std::optional<int> {
    for (int i = 0; i < planner.size(); ++i) {
      int k = (start + i) % planner.size();
      if (planner.fits(k, u, w, p)) return k;
    }
    return std::nullopt;
  };

  auto core_item = [&](int index, int count) {
    const auto& c = *design.core_config;
    PlacedItem it;
    it.kind = ItemKind::core_switch;
    it.rack_units = c.rack_units * count;
    it.count = count;
    it.index = index;
    it.weight = count * c.weight;
    it.power = count * c.power;
    it.label = c.id();
    return it;
  };

  // 1. Modular core switches are indivisible and go first.
  bool modular_core = design.core_config && design.core_config->modular();
  if (modular_core) {
    for (int i = 0; i < cores; ++i) {
      auto it = core_item(i, 1);
      auto k = first_fit(start_rack(i, cores), it.rack_units, it.weight, it.power);
      if (!k) {
        layout.unplaced.push_back("core switch " + std::to_string(i));
        continue;
      }
      planner.put(*k, it, false);
    }
  }

  // 2. Reserved space.
  for (std::size_t i = 0; i < options.reserved.size(); ++i) {
    const auto& r = options.reserved[i];
    PlacedItem it;
    it.kind = ItemKind::reserved;
    it.rack_units = r.rack_units;
    it.index = static_cast<int>(i);
    it.weight = r.weight;
    it.power = r.power;
    it.label = r.label;
    auto k = first_fit(0, it.rack_units, it.weight, it.power);
    if (!k) {
      layout.unplaced.push_back("reserved '" + r.label + "'");
      continue;
    }
    planner.put(*k, it, false);
  }

  // 3. Monolithic core switches in contiguous groups, one group per rack.
  if (design.core_config && !modular_core && cores > 0) {
    int groups = std::clamp(options.core_groups, 1, cores);
    int next = 0;
    for (int g = 0; g < groups; ++g) {
      int size = cores / groups + (g < cores % groups ? 1 : 0);
      auto it = core_item(next, size);
      auto k = first_fit(start_rack(g, groups), it.rack_units, it.weight, it.power);
      if (k) {
        planner.put(*k, it, false);
      } else {
        // Group does not fit anywhere whole; fall back to single switches.
        for (int s = 0; s < size; ++s) {
          auto one = core_item(next + s, 1);
          auto k1 = first_fit(start_rack(g, groups), one.rack_units, one.weight, one.power);
          if (!k1) {
            layout.unplaced.push_back("core switch " + std::to_string(next + s));
            continue;
          }
          planner.put(*k1, one, false);
        }
      }
      next += size;
    }
  }

  // 4. Building blocks, whole-rack first; spread when dense or when unavoidable.
  int current = 0;
  for (int b = 0; b < design.edge_count(); ++b) {
    int nodes = design.nodes_on_edge(b);
    bool placed = false;
    while (!placed) {
      if (current >= planner.size()) {
        if (planner.place_block_spread(0, planner.size() - 1, b, edge, nodes)) {
          layout.spread_blocks.push_back(b);
          placed = true;
        }
        break;
      }
      if (planner.place_block_whole(current, b, edge, nodes)) {
        layout.whole_blocks.push_back(b);
        placed = true;
        break;
      }
      if (options.dense && planner.rack(current).used() &&
          planner.place_block_spread(0, current, b, edge, nodes)) {
        layout.spread_blocks.push_back(b);
        placed = true;
        break;
      }
      ++current;
    }
    if (!placed) layout.unplaced.push_back("building block " + std::to_string(b));
  }

  layout.racks = planner.finish();
  return layout;
}

/// Human-readable budget violations; empty when every rack is within budget.
inline std::vector<std::string> budget_violations(const RackLayout& layout) {
  std::vector<std::string> out;
  for (const auto& r : layout.racks) {
    int sum = 0;
    Weight w;
    Power p;
    std::vector<bool> taken(static_cast<std::size_t>(r.capacity), false);
    for (const auto& it : r.items) {
      sum += it.rack_units;
      w += it.weight;
      p += it.power;
      for (int u = it.position; u < it.position + it.rack_units; ++u) {
        if (u < 0 || u >= r.capacity || taken[static_cast<std::size_t>(u)])
          out.push_back("rack " + std::to_string(r.index) + ": overlapping or out-of-range unit " +
                        std::to_string(u));
        else
          taken[static_cast<std::size_t>(u)] = true;
      }
    }
    if (sum > r.capacity) out.push_back("rack " + std::to_string(r.index) + ": space");
    if (layout.rack_weight_budget && w > *layout.rack_weight_budget)
      out.push_back("rack " + std::to_string(r.index) + ": weight");
    if (layout.rack_power_budget && p > *layout.rack_power_budget)
      out.push_back("rack " + std::to_string(r.index) + ": power");
  }
  return out;
}

} // namespace fattree
