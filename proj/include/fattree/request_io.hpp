#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fattree/catalog.hpp"
#include "fattree/designer.hpp"
#include "fattree/error.hpp"

namespace fattree {

/// Blocking factor from a JSON integer or a "p/q" string.
inline Rational parse_blocking(const nlohmann::json& v, const std::string& path) {
  if (v.is_number_integer()) {
    auto x = v.get<std::int64_t>();
    if (x <= 0) throw ValidationError(path, "must be > 0");
    return Rational(x);
  }
  if (v.is_string()) {
    auto r = Rational::parse(v.get<std::string>());
    if (!r || *r <= Rational(0)) throw ValidationError(path, "expected a positive integer or p/q rational");
    return *r;
  }
  throw ValidationError(path, "expected a positive integer or p/q rational");
}

/// Request document: node_count, blocking_factor, form_factor {blade|rack_mounted},
/// avg_cable_cost, constraints, prefer_expandability. Money in minor units,
/// power in watts, weight in kilograms.
inline DesignRequest load_request(const nlohmann::json& doc) {
  using detail::FieldReader;
  FieldReader r(doc, "$");
  r.allow_only({"node_count", "blocking_factor", "form_factor", "avg_cable_cost", "constraints",
                "prefer_expandability"});
  DesignRequest req;
  req.node_count = static_cast<int>(r.integer("node_count", 2));
  if (doc.contains("blocking_factor")) req.blocking_factor = parse_blocking(doc.at("blocking_factor"), "$.blocking_factor");
  req.avg_cable_cost = Money(r.integer("avg_cable_cost", 0, req.avg_cable_cost.value));
  req.prefer_expandability = r.boolean("prefer_expandability", false);

  if (doc.contains("form_factor")) {
    const auto& ff = doc.at("form_factor");
    FieldReader f(ff, "$.form_factor");
    f.allow_only({"blade", "rack_mounted"});
    if (ff.size() != 1) throw ValidationError("$.form_factor", "expected exactly one of blade, rack_mounted");
    if (ff.contains("blade")) {
      FieldReader b(ff.at("blade"), "$.form_factor.blade");
      b.allow_only({"enclosure_capacity", "enclosure_cost", "embedded_edge_switch_id", "pass_through_cost", "node_cost"});
      BladeEnclosures blade;
      blade.enclosure_capacity = static_cast<int>(b.integer("enclosure_capacity", 1));
      blade.enclosure_cost = Money(b.integer("enclosure_cost", 0, 0));
      blade.embedded_edge_switch_id = b.string("embedded_edge_switch_id");
      if (b.has("pass_through_cost")) blade.pass_through_cost = Money(b.integer("pass_through_cost", 0));
      if (b.has("node_cost")) blade.node_cost = Money(b.integer("node_cost", 0));
      req.form_factor = blade;
    } else {
      FieldReader m(ff.at("rack_mounted"), "$.form_factor.rack_mounted");
      m.allow_only({"node_rack_units", "node_power", "node_weight", "node_cost"});
      RackMountedNodes rack;
      rack.node_rack_units = static_cast<int>(m.integer("node_rack_units", 1, 1));
      rack.node_power = Power(m.milli("node_power", false));
      rack.node_weight = Weight(m.milli("node_weight", false));
      if (m.has("node_cost")) rack.node_cost = Money(m.integer("node_cost", 0));
      req.form_factor = rack;
    }
  }

  if (doc.contains("constraints")) {
    FieldReader c(doc.at("constraints"), "$.constraints");
    c.allow_only({"max_network_rack_units", "min_spare_core_ports", "max_network_power", "max_network_cost"});
    auto& cs = req.constraints;
    if (c.has("max_network_rack_units")) cs.max_network_rack_units = c.integer("max_network_rack_units", 0);
    if (c.has("min_spare_core_ports")) cs.min_spare_core_ports = c.integer("min_spare_core_ports", 0);
    if (c.has("max_network_power")) cs.max_network_power = Power(c.milli("max_network_power", true));
    if (c.has("max_network_cost")) cs.max_network_cost = Money(c.integer("max_network_cost", 0));
  }
  req.validate();
  return req;
}

inline DesignRequest load_request(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("$", std::string("malformed JSON: ") + e.what());
  }
  return load_request(doc);
}

} // namespace fattree
