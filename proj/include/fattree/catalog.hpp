#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fattree/error.hpp"
#include "fattree/rational.hpp"
#include "fattree/units.hpp"

namespace fattree {

struct Roles {
  bool edge = false;
  bool core = false;

  bool empty() const { return !edge && !core; }
  friend bool operator==(const Roles&, const Roles&) = default;
};

/// Fixed-configuration switch.
struct MonolithicSwitchModel {
  std::string id;
  std::string name;
  int ports = 0;
  Money cost;
  Power power;
  int rack_units = 1;
  Weight weight;
  Roles roles;
  // Only usable as the embedded switch of a blade enclosure.
  bool blade_embedded = false;

  friend bool operator==(const MonolithicSwitchModel&, const MonolithicSwitchModel&) = default;
};

/// Chassis switch sold with a variable number of line cards. Fabric boards are
/// always installed at the count needed for a non-blocking internal fabric.
struct ModularSwitchFamily {
  std::string id;
  Money chassis_cost;
  int chassis_rack_units = 1;
  Power chassis_power;
  Weight chassis_weight;
  Money fabric_board_cost;
  int fabric_boards_required = 1;
  Money line_card_cost;
  int ports_per_line_card = 1;
  int max_line_cards = 1;
  Power per_line_card_power;
  Weight per_line_card_weight;
  Roles roles;

  friend bool operator==(const ModularSwitchFamily&, const ModularSwitchFamily&) = default;
};

/// One purchasable switch configuration; the unit the designer iterates over.
struct SwitchConfig {
  std::string source_id;
  std::optional<int> configured_line_cards;
  int ports = 0;
  Money cost;
  Power power;
  int rack_units = 1;
  Weight weight;
  Roles roles;
  int expandable_ports = 0;
  bool blade_embedded = false;

  bool modular() const { return configured_line_cards.has_value(); }

  /// Monolithic models keep their own id; modular configurations are "<family>/<cards>".
  std::string id() const {
    if (!configured_line_cards) return source_id;
    return source_id + "/" + std::to_string(*configured_line_cards);
  }

  friend bool operator==(const SwitchConfig&, const SwitchConfig&) = default;
};

struct Catalog {
  std::string currency = "USD";
  std::vector<SwitchConfig> edge_set;
  std::vector<SwitchConfig> core_set;
  // Source entries, kept for serialization.
  std::vector<MonolithicSwitchModel> monolithic;
  std::vector<ModularSwitchFamily> modular;

  const SwitchConfig* find(std::string_view id) const {
    for (const auto* set : {&edge_set, &core_set}) {
      for (const auto& c : *set) {
        if (c.id() == id) return &c;
      }
    }
    return nullptr;
  }

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Per-port characteristics as exact rationals: cost in minor units, power in
/// milliwatts, weight in grams.
struct PerPortMetrics {
  Rational cost;
  Rational power;
  Rational rack_units;
  Rational weight;

  friend bool operator==(const PerPortMetrics&, const PerPortMetrics&) = default;
};

inline PerPortMetrics per_port_metrics(const SwitchConfig& config) {
  std::int64_t p = config.ports;
  return {Rational(config.cost.value, p), Rational(config.power.value, p), Rational(config.rack_units, p),
          Rational(config.weight.value, p)};
}

inline SwitchConfig to_config(const MonolithicSwitchModel& m) {
  SwitchConfig c;
  c.source_id = m.id;
  c.ports = m.ports;
  c.cost = m.cost;
  c.power = m.power;
  c.rack_units = m.rack_units;
  c.weight = m.weight;
  c.roles = m.roles;
  c.expandable_ports = 0;
  c.blade_embedded = m.blade_embedded;
  return c;
}

/// One configuration per installed line-card count, 1..max_line_cards.
inline std::vector<SwitchConfig> expand_modular(const ModularSwitchFamily& family) {
  std::vector<SwitchConfig> out;
  out.reserve(static_cast<std::size_t>(family.max_line_cards));
  Money base = family.chassis_cost + family.fabric_boards_required * family.fabric_board_cost;
  for (int k = 1; k <= family.max_line_cards; ++k) {
    SwitchConfig c;
    c.source_id = family.id;
    c.configured_line_cards = k;
    c.ports = k * family.ports_per_line_card;
    c.cost = base + k * family.line_card_cost;
    c.power = family.chassis_power + k * family.per_line_card_power;
    c.rack_units = family.chassis_rack_units;
    c.weight = family.chassis_weight + k * family.per_line_card_weight;
    c.roles = family.roles;
    c.expandable_ports = (family.max_line_cards - k) * family.ports_per_line_card;
    out.push_back(std::move(c));
  }
  return out;
}

struct CatalogLoadOptions {
  // Allow a catalog without core (or edge) switches; only star designs are then possible.
  bool star_only = false;
};

namespace detail {

using nlohmann::json;

class FieldReader {
public:
  FieldReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ValidationError(path_, "expected an object");
  }

  void allow_only(std::initializer_list<std::string_view> names) const {
    for (const auto& [key, value] : obj_.items()) {
      if (std::find(names.begin(), names.end(), key) == names.end())
        throw ValidationError(path_ + "." + key, "unknown field");
    }
  }

  bool has(const char* name) const { return obj_.contains(name); }

  std::string string(const char* name, bool required = true, std::string fallback = {}) const {
    if (!obj_.contains(name)) {
      if (required) throw ValidationError(at(name), "missing required field");
      return fallback;
    }
    const json& v = obj_.at(name);
    if (!v.is_string()) throw ValidationError(at(name), "expected a string");
    std::string s = v.get<std::string>();
    if (required && s.empty()) throw ValidationError(at(name), "must not be empty");
    return s;
  }

  std::int64_t integer(const char* name, std::int64_t min, std::optional<std::int64_t> fallback = {}) const {
    if (!obj_.contains(name)) {
      if (!fallback) throw ValidationError(at(name), "missing required field");
      return *fallback;
    }
    const json& v = obj_.at(name);
    if (!v.is_number_integer()) throw ValidationError(at(name), "expected an integer");
    std::int64_t x = v.get<std::int64_t>();
    if (x < min) throw ValidationError(at(name), "must be >= " + std::to_string(min));
    return x;
  }

  /// Non-negative number in base units, returned in milli-units.
  std::int64_t milli(const char* name, bool required) const {
    if (!obj_.contains(name)) {
      if (required) throw ValidationError(at(name), "missing required field");
      return 0;
    }
    const json& v = obj_.at(name);
    if (!v.is_number()) throw ValidationError(at(name), "expected a number");
    auto m = milli_from_number(v.get<double>());
    if (!m) throw ValidationError(at(name), "must be >= 0 with at most 3 decimals");
    return *m;
  }

  bool boolean(const char* name, bool fallback) const {
    if (!obj_.contains(name)) return fallback;
    const json& v = obj_.at(name);
    if (!v.is_boolean()) throw ValidationError(at(name), "expected a boolean");
    return v.get<bool>();
  }

  Roles roles(const char* name) const {
    if (!obj_.contains(name)) throw ValidationError(at(name), "missing required field");
    const json& v = obj_.at(name);
    if (!v.is_array()) throw ValidationError(at(name), "expected an array");
    Roles r;
    for (const auto& item : v) {
      if (!item.is_string()) throw ValidationError(at(name), "roles must be strings");
      auto s = item.get<std::string>();
      bool* slot = s == "edge" ? &r.edge : s == "core" ? &r.core : nullptr;
      if (!slot) throw ValidationError(at(name), "unknown role '" + s + "'");
      if (*slot) throw ValidationError(at(name), "duplicate role '" + s + "'");
      *slot = true;
    }
    if (r.empty()) throw ValidationError(at(name), "must name at least one role");
    return r;
  }

  std::string at(const char* name) const { return path_ + "." + name; }

private:
  const json& obj_;
  std::string path_;
};

inline json roles_json(const Roles& r) {
  json a = json::array();
  if (r.edge) a.push_back("edge");
  if (r.core) a.push_back("core");
  return a;
}

inline json milli_json(std::int64_t milli) {
  if (milli % kMilli == 0) return milli / kMilli;
  return static_cast<double>(milli) / static_cast<double>(kMilli);
}

inline MonolithicSwitchModel parse_monolithic(const json& j, const std::string& path) {
  FieldReader r(j, path);
  r.allow_only({"id", "name", "ports", "cost", "power", "rack_units", "weight", "roles", "blade_embedded"});
  MonolithicSwitchModel m;
  m.id = r.string("id");
  m.name = r.string("name", false, m.id);
  m.ports = static_cast<int>(r.integer("ports", 2));
  m.cost = Money(r.integer("cost", 0));
  m.power = Power(r.milli("power", false));
  m.blade_embedded = r.boolean("blade_embedded", false);
  // An embedded switch lives inside its enclosure and takes no rack space of its own.
  m.rack_units = static_cast<int>(r.integer("rack_units", m.blade_embedded ? 0 : 1));
  m.weight = Weight(r.milli("weight", false));
  m.roles = r.roles("roles");
  return m;
}

inline ModularSwitchFamily parse_modular(const json& j, const std::string& path) {
  FieldReader r(j, path);
  r.allow_only({"id", "chassis_cost", "chassis_rack_units", "chassis_power", "chassis_weight", "fabric_board_cost",
                "fabric_boards_required", "line_card_cost", "ports_per_line_card", "max_line_cards",
                "per_line_card_power", "per_line_card_weight", "roles"});
  ModularSwitchFamily f;
  f.id = r.string("id");
  f.chassis_cost = Money(r.integer("chassis_cost", 0));
  f.chassis_rack_units = static_cast<int>(r.integer("chassis_rack_units", 1));
  f.chassis_power = Power(r.milli("chassis_power", false));
  f.chassis_weight = Weight(r.milli("chassis_weight", false));
  f.fabric_board_cost = Money(r.integer("fabric_board_cost", 0));
  f.fabric_boards_required = static_cast<int>(r.integer("fabric_boards_required", 1));
  f.line_card_cost = Money(r.integer("line_card_cost", 0));
  f.ports_per_line_card = static_cast<int>(r.integer("ports_per_line_card", 1));
  f.max_line_cards = static_cast<int>(r.integer("max_line_cards", 1));
  f.per_line_card_power = Power(r.milli("per_line_card_power", false));
  f.per_line_card_weight = Weight(r.milli("per_line_card_weight", false));
  f.roles = r.roles("roles");
  return f;
}

} // namespace detail

/// Builds the edge and core sets from already-validated source entries.
inline Catalog build_catalog(std::string currency, std::vector<MonolithicSwitchModel> monolithic,
                             std::vector<ModularSwitchFamily> modular, CatalogLoadOptions options = {}) {
  Catalog cat;
  cat.currency = std::move(currency);

  std::set<std::string> source_ids;
  for (const auto& m : monolithic) {
    if (!source_ids.insert(m.id).second) throw ConflictError("duplicate id '" + m.id + "'");
  }
  for (const auto& f : modular) {
    if (!source_ids.insert(f.id).second) throw ConflictError("duplicate id '" + f.id + "'");
  }

  std::vector<SwitchConfig> all;
  for (const auto& m : monolithic) all.push_back(to_config(m));
  for (const auto& f : modular) {
    auto expanded = expand_modular(f);
    all.insert(all.end(), expanded.begin(), expanded.end());
  }
  std::set<std::string> config_ids;
  for (const auto& c : all) {
    if (!config_ids.insert(c.id()).second) throw ConflictError("duplicate id '" + c.id() + "'");
  }
  std::sort(all.begin(), all.end(), [](const SwitchConfig& a, const SwitchConfig& b) {
    if (a.source_id != b.source_id) return a.source_id < b.source_id;
    return a.ports < b.ports;
  });
  for (const auto& c : all) {
    if (c.roles.edge) cat.edge_set.push_back(c);
    if (c.roles.core) cat.core_set.push_back(c);
  }

  if (cat.edge_set.empty() && cat.core_set.empty()) throw ValidationError("", "catalog empty");
  if (!options.star_only) {
    if (cat.edge_set.empty()) throw ValidationError("", "catalog has no edge switches");
    if (cat.core_set.empty()) throw ValidationError("", "catalog has no core switches");
  }

  std::sort(monolithic.begin(), monolithic.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(modular.begin(), modular.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  cat.monolithic = std::move(monolithic);
  cat.modular = std::move(modular);
  return cat;
}

inline Catalog load_catalog(const nlohmann::json& doc, CatalogLoadOptions options = {}) {
  using nlohmann::json;
  if (doc.is_null() || (doc.is_object() && doc.empty())) throw ValidationError("", "catalog empty");
  detail::FieldReader root(doc, "$");
  root.allow_only({"currency", "monolithic", "modular"});
  std::string currency = root.string("currency");

  std::vector<MonolithicSwitchModel> monolithic;
  std::vector<ModularSwitchFamily> modular;
  if (doc.contains("monolithic")) {
    const json& arr = doc.at("monolithic");
    if (!arr.is_array()) throw ValidationError("$.monolithic", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      monolithic.push_back(detail::parse_monolithic(arr[i], "$.monolithic[" + std::to_string(i) + "]"));
  }
  if (doc.contains("modular")) {
    const json& arr = doc.at("modular");
    if (!arr.is_array()) throw ValidationError("$.modular", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      modular.push_back(detail::parse_modular(arr[i], "$.modular[" + std::to_string(i) + "]"));
  }
  return build_catalog(std::move(currency), std::move(monolithic), std::move(modular), options);
}

inline Catalog load_catalog(std::string_view text, CatalogLoadOptions options = {}) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ValidationError("", "catalog empty");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("$", std::string("malformed JSON: ") + e.what());
  }
  return load_catalog(doc, options);
}

/// Inverse of load_catalog: the source document (not the expanded sets).
inline nlohmann::json catalog_to_json(const Catalog& cat) {
  using nlohmann::json;
  using detail::milli_json;
  using detail::roles_json;
  json mono = json::array();
  for (const auto& m : cat.monolithic) {
    json j = {{"id", m.id},
              {"name", m.name},
              {"ports", m.ports},
              {"cost", m.cost.value},
              {"power", milli_json(m.power.value)},
              {"rack_units", m.rack_units},
              {"weight", milli_json(m.weight.value)},
              {"roles", roles_json(m.roles)}};
    if (m.blade_embedded) j["blade_embedded"] = true;
    mono.push_back(std::move(j));
  }
  json mod = json::array();
  for (const auto& f : cat.modular) {
    mod.push_back({{"id", f.id},
                   {"chassis_cost", f.chassis_cost.value},
                   {"chassis_rack_units", f.chassis_rack_units},
                   {"chassis_power", milli_json(f.chassis_power.value)},
                   {"chassis_weight", milli_json(f.chassis_weight.value)},
                   {"fabric_board_cost", f.fabric_board_cost.value},
                   {"fabric_boards_required", f.fabric_boards_required},
                   {"line_card_cost", f.line_card_cost.value},
                   {"ports_per_line_card", f.ports_per_line_card},
                   {"max_line_cards", f.max_line_cards},
                   {"per_line_card_power", milli_json(f.per_line_card_power.value)},
                   {"per_line_card_weight", milli_json(f.per_line_card_weight.value)},
                   {"roles", roles_json(f.roles)}});
  }
  return {{"currency", cat.currency}, {"monolithic", mono}, {"modular", mod}};
}

} // namespace fattree
