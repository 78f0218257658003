#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fattree/catalog.hpp"
#include "fattree/error.hpp"
#include "fattree/rational.hpp"
#include "fattree/units.hpp"

namespace fattree {

// Quick lower bounds for a two-layer non-blocking fat-tree of identical switches.
// A full tree of P-port switches connects P*P/2 nodes with 3P/2 switches, i.e.
// three switch ports per node, so additive metrics scale as 3N times the
// per-port value.

/// How per-port values are rounded before being multiplied by 3N.
enum class PerPortRounding {
  exact,  // exact rationals; the estimate is a true lower bound
  quoted, // cost to whole currency units, power to 0.01 W, as per-port figures are usually quoted
};

struct PerPortEstimate {
  std::int64_t node_count = 0;
  std::int64_t total_ports = 0; // 3N
  PerPortMetrics per_port;      // after rounding
  Money est_switch_cost;
  std::int64_t est_cable_count = 0;
  Money est_cable_cost;
  Money est_cost; // switches + cables
  Power est_power;
  Rational est_rack_units;
  Weight est_weight;
  bool exact = false;
  std::optional<int> bundle_factor;
};

/// Bundle factor X when the per-port estimate is exact for N nodes on P-port
/// switches: X = 1 at N = P*P/2, or 1 < X < P/2 with X dividing P/2 and N*X = P*P/2.
inline std::optional<int> exactness_condition(std::int64_t nodes, int ports) {
  if (ports < 4 || ports % 2 != 0 || nodes < 1) return std::nullopt;
  std::int64_t half = ports / 2;
  std::int64_t full = static_cast<std::int64_t>(ports) * half;
  if (nodes == full) return 1;
  if (full % nodes != 0) return std::nullopt;
  std::int64_t x = full / nodes;
  if (x > 1 && x < half && half % x == 0) return static_cast<int>(x);
  return std::nullopt;
}

inline PerPortMetrics round_per_port(const PerPortMetrics& m, PerPortRounding rounding) {
  if (rounding == PerPortRounding::exact) return m;
  PerPortMetrics r = m;
  r.cost = Rational((m.cost / Rational(kMinorPerMajor)).round() * kMinorPerMajor);
  r.power = Rational((m.power / Rational(10)).round() * 10);
  return r;
}

/// Cable lower bound for the estimate: one cable per node plus one per two
/// uplink ports (N for a non-blocking tree); blade nodes need no node cables.
inline std::int64_t estimated_cable_count(std::int64_t nodes, bool blade) { return blade ? nodes : 2 * nodes; }

inline PerPortEstimate lower_bound_estimate(std::int64_t nodes, const SwitchConfig& config, Money avg_cable_cost,
                                            bool blade, PerPortRounding rounding = PerPortRounding::exact) {
  if (nodes < 1) throw ValidationError("nodes", "must be >= 1");
  std::int64_t reach = static_cast<std::int64_t>(config.ports) * (config.ports / 2);
  if (nodes > reach)
    throw RadixError("exceeds radix: " + std::to_string(nodes) + " nodes > " + std::to_string(reach) +
                     " reachable with " + std::to_string(config.ports) + "-port switches");

  PerPortEstimate e;
  e.node_count = nodes;
  e.total_ports = 3 * nodes;
  e.per_port = round_per_port(per_port_metrics(config), rounding);
  Rational ports(e.total_ports);
  e.est_switch_cost = Money((ports * e.per_port.cost).round());
  e.est_cable_count = estimated_cable_count(nodes, blade);
  e.est_cable_cost = e.est_cable_count * avg_cable_cost;
  e.est_cost = e.est_switch_cost + e.est_cable_cost;
  e.est_power = Power((ports * e.per_port.power).round());
  e.est_rack_units = ports * e.per_port.rack_units;
  e.est_weight = Weight((ports * e.per_port.weight).round());
  e.bundle_factor = exactness_condition(nodes, config.ports);
  e.exact = e.bundle_factor.has_value();
  return e;
}

} // namespace fattree
