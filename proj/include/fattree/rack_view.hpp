#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fattree/placement.hpp"

namespace fattree {

inline nlohmann::ordered_json layout_json(const RackLayout& layout) {
  using J = nlohmann::ordered_json;
  J j;
  j["racks_used"] = layout.racks_used();
  j["whole_blocks"] = layout.whole_blocks;
  j["spread_blocks"] = layout.spread_blocks;
  j["unplaced"] = layout.unplaced;
  j["rack_weight_budget_kg"] = layout.rack_weight_budget ? J(format_kg(*layout.rack_weight_budget)) : J();
  j["rack_power_budget_w"] = layout.rack_power_budget ? J(format_watts(*layout.rack_power_budget)) : J();
  J racks = J::array();
  for (const auto& r : layout.racks) {
    J items = J::array();
    for (const auto& it : r.items) {
      J x;
      x["kind"] = to_string(it.kind);
      x["position"] = it.position;
      x["rack_units"] = it.rack_units;
      x["count"] = it.count;
      if (it.block >= 0) x["block"] = it.block;
      if (it.index >= 0) x["index"] = it.index;
      if (!it.label.empty()) x["label"] = it.label;
      x["weight_kg"] = format_kg(it.weight);
      x["power_w"] = format_watts(it.power);
      items.push_back(std::move(x));
    }
    racks.push_back({{"index", r.index},
                     {"row", r.row},
                     {"column", r.column},
                     {"capacity", r.capacity},
                     {"used_units", r.used_units},
                     {"weight_kg", format_kg(r.weight)},
                     {"power_w", format_watts(r.power)},
                     {"future_nodes", r.future_nodes},
                     {"items", items}});
  }
  j["racks"] = racks;
  return j;
}

namespace detail {

/// One cell per rack unit, top unit first.
inline std::vector<std::string> unit_labels(const Rack& r) {
  std::vector<std::string> cells(static_cast<std::size_t>(r.capacity), "");
  for (const auto& it : r.items) {
    for (int u = 0; u < it.rack_units; ++u) {
      std::string s;
      switch (it.kind) {
      case ItemKind::core_switch: s = "core " + std::to_string(it.index + (it.count > 1 ? u * it.count / it.rack_units : 0)); break;
      case ItemKind::edge_switch: s = "edge " + std::to_string(it.block); break;
      case ItemKind::node_block: s = "node b" + std::to_string(it.block); break;
      case ItemKind::reserved: s = it.label; break;
      }
      cells[static_cast<std::size_t>(it.position + u)] = s;
    }
  }
  return {cells.rbegin(), cells.rend()};
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() > width) s.resize(width);
  return s + std::string(width - s.size(), ' ');
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '&': out += "&amp;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

} // namespace detail

/// Front view of every used rack, side by side in groups of four.
inline std::string layout_ascii(const RackLayout& layout) {
  constexpr std::size_t kWidth = 10;
  std::vector<const Rack*> used;
  for (const auto& r : layout.racks)
    if (r.used()) used.push_back(&r);
  std::ostringstream os;
  for (std::size_t start = 0; start < used.size(); start += 4) {
    std::size_t end = std::min(used.size(), start + 4);
    int height = 0;
    for (std::size_t i = start; i < end; ++i) height = std::max(height, used[i]->capacity);
    std::vector<std::vector<std::string>> cols;
    os << "    ";
    for (std::size_t i = start; i < end; ++i) {
      cols.push_back(detail::unit_labels(*used[i]));
      os << " " << detail::pad("rack " + std::to_string(used[i]->index), kWidth + 2);
    }
    os << "\n";
    for (int row = 0; row < height; ++row) {
      int unit = height - row;
      std::string num = std::to_string(unit);
      os << std::string(3 - std::min<std::size_t>(3, num.size()), ' ') << num << " ";
      for (std::size_t c = 0; c < cols.size(); ++c) {
        int offset = height - static_cast<int>(cols[c].size());
        if (row < offset) {
          os << std::string(kWidth + 3, ' ');
          continue;
        }
        const auto& cell = cols[c][static_cast<std::size_t>(row - offset)];
        os << "|" << detail::pad(cell.empty() ? "" : cell, kWidth) << "| ";
      }
      os << "\n";
    }
    os << "\n";
  }
  os << "racks used: " << layout.racks_used() << ", whole blocks: " << layout.whole_blocks.size()
     << ", spread blocks: " << layout.spread_blocks.size() << "\n";
  for (const auto& u : layout.unplaced) os << "unplaced: " << u << "\n";
  return os.str();
}

/// Room seen from above: one cell per rack with its used units.
inline std::string layout_top_view(const RackLayout& layout) {
  int rows = 0;
  for (const auto& r : layout.racks) rows = std::max(rows, r.row + 1);
  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(rows),
                                             std::vector<std::string>(static_cast<std::size_t>(layout.racks_per_row)));
  for (const auto& r : layout.racks) {
    std::string cell = "#" + std::to_string(r.index) + ":";
    if (!r.used()) {
      cell += "--";
    } else {
      bool core = false;
      for (const auto& it : r.items) core = core || it.kind == ItemKind::core_switch;
      cell += std::to_string(r.used_units) + "U" + (core ? "*" : "");
    }
    grid[static_cast<std::size_t>(r.row)][static_cast<std::size_t>(r.column)] = cell;
  }
  std::ostringstream os;
  for (int row = 0; row < rows; ++row) {
    os << "row " << row << ":";
    for (const auto& c : grid[static_cast<std::size_t>(row)]) os << " [" << detail::pad(c, 9) << "]";
    os << "\n";
  }
  os << "(* = core switches)\n";
  return os.str();
}

/// SVG front view of every used rack.
inline std::string layout_svg(const RackLayout& layout) {
  constexpr int kUnit = 12;
  constexpr int kRackWidth = 120;
  constexpr int kGap = 30;
  constexpr int kTop = 30;
  std::vector<const Rack*> used;
  int height = 0;
  for (const auto& r : layout.racks) {
    if (!r.used()) continue;
    used.push_back(&r);
    height = std::max(height, r.capacity);
  }
  int width = kGap + static_cast<int>(used.size()) * (kRackWidth + kGap);
  int total_height = kTop + height * kUnit + kGap;
  auto fill = [](ItemKind k) {
    switch (k) {
    case ItemKind::core_switch: return "#d62728";
    case ItemKind::edge_switch: return "#1f77b4";
    case ItemKind::node_block: return "#c7c7c7";
    case ItemKind::reserved: return "#ffbb78";
    }
    return "#ffffff";
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << total_height
     << "\" font-family=\"monospace\" font-size=\"9\">\n";
  for (std::size_t i = 0; i < used.size(); ++i) {
    const Rack& r = *used[i];
    int x = kGap + static_cast<int>(i) * (kRackWidth + kGap);
    int base = kTop + height * kUnit; // y of the rack bottom
    os << "  <text x=\"" << x << "\" y=\"" << (kTop - 8) << "\">rack " << r.index << "</text>\n";
    os << "  <rect x=\"" << x << "\" y=\"" << (base - r.capacity * kUnit) << "\" width=\"" << kRackWidth
       << "\" height=\"" << r.capacity * kUnit << "\" fill=\"none\" stroke=\"#000\"/>\n";
    for (const auto& it : r.items) {
      int y = base - (it.position + it.rack_units) * kUnit;
      std::string label = to_string(it.kind);
      if (it.block >= 0) label += " b" + std::to_string(it.block);
      if (it.count > 1) label += " x" + std::to_string(it.count);
      if (it.kind == ItemKind::reserved) label = it.label;
      os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kRackWidth << "\" height=\""
         << it.rack_units * kUnit << "\" fill=\"" << fill(it.kind) << "\" stroke=\"#333\"/>\n";
      os << "  <text x=\"" << (x + 3) << "\" y=\"" << (y + 9) << "\">" << detail::xml_escape(label) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace fattree
