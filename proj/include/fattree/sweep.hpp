#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fattree/designer.hpp"
#include "fattree/estimator.hpp"

namespace fattree {

/// One row of the estimate-versus-design comparison.
struct SweepPoint {
  int nodes = 0;
  std::optional<Money> estimate;   // empty beyond the radix of the estimating switch
  std::optional<Money> actual;     // empty when no design exists
  std::optional<TopologyKind> kind;
  bool exact = false;

  /// (actual - estimate) / actual, when both exist.
  std::optional<Rational> gap() const {
    if (!estimate || !actual || actual->value == 0) return std::nullopt;
    return Rational(actual->value - estimate->value, actual->value);
  }
};

struct Sweep {
  std::string switch_id;
  std::vector<SweepPoint> points;

  /// Median gap over points whose design is a two-layer fat-tree.
  std::optional<Rational> median_fat_tree_gap() const {
    std::vector<Rational> gaps;
    for (const auto& p : points) {
      if (p.kind == TopologyKind::fat_tree && p.gap()) gaps.push_back(*p.gap());
    }
    if (gaps.empty()) return std::nullopt;
    std::sort(gaps.begin(), gaps.end());
    std::size_t m = gaps.size() / 2;
    if (gaps.size() % 2 == 1) return gaps[m];
    return (gaps[m - 1] + gaps[m]) / Rational(2);
  }
};

/// Estimate (exact per-port values) against the designer's cost for every N in [from, to].
inline Sweep run_sweep(int from, int to, const DesignRequest& base, const Catalog& cat, const SwitchConfig& config,
                       const DesignOptions& opts = {}) {
  if (from < 2 || to < from) throw ValidationError("range", "need 2 <= from <= to");
  Sweep s;
  s.switch_id = config.id();
  const bool blade = base.blade() != nullptr;
  for (int n = from; n <= to; ++n) {
    SweepPoint p;
    p.nodes = n;
    try {
      auto e = lower_bound_estimate(n, config, base.avg_cable_cost, blade, PerPortRounding::exact);
      p.estimate = e.est_cost;
      p.exact = e.exact;
    } catch (const RadixError&) {
    }
    DesignRequest req = base;
    req.node_count = n;
    auto r = design(req, cat, opts);
    if (r.winner) {
      p.actual = r.winner->metrics.cost;
      p.kind = r.winner->kind;
    }
    s.points.push_back(p);
  }
  return s;
}

inline std::string percent(const Rational& r) { return (r * Rational(100)).to_decimal(2); }

inline nlohmann::ordered_json sweep_json(const Sweep& s) {
  using J = nlohmann::ordered_json;
  J rows = J::array();
  for (const auto& p : s.points) {
    J row;
    row["nodes"] = p.nodes;
    row["estimate"] = p.estimate ? J(p.estimate->value) : J();
    row["actual"] = p.actual ? J(p.actual->value) : J();
    row["kind"] = p.kind ? J(to_string(*p.kind)) : J();
    row["gap_percent"] = p.gap() ? J(percent(*p.gap())) : J();
    row["exact"] = p.exact;
    rows.push_back(std::move(row));
  }
  auto median = s.median_fat_tree_gap();
  return {{"switch", s.switch_id}, {"points", rows}, {"median_fat_tree_gap_percent", median ? J(percent(*median)) : J()}};
}

inline std::string sweep_text(const Sweep& s) {
  std::ostringstream os;
  os << "# estimate switch: " << s.switch_id << "\n";
  os << "nodes\testimate\tactual\tkind\tgap%\texact\n";
  for (const auto& p : s.points) {
    os << p.nodes << "\t" << (p.estimate ? format_money(*p.estimate) : "-") << "\t"
       << (p.actual ? format_money(*p.actual) : "-") << "\t" << (p.kind ? to_string(*p.kind) : "-") << "\t"
       << (p.gap() ? percent(*p.gap()) : "-") << "\t" << (p.exact ? "yes" : "no") << "\n";
  }
  auto median = s.median_fat_tree_gap();
  os << "# median gap over fat-tree points: " << (median ? percent(*median) + "%" : "n/a") << "\n";
  return os.str();
}

} // namespace fattree
