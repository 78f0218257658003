#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fattree/fattree.hpp"

namespace fattree::test {

inline std::string data_path(const std::string& name) { return std::string(FATTREE_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Catalog data_catalog(const std::string& name) { return load_catalog(std::string_view(slurp(data_path(name)))); }

inline MonolithicSwitchModel switch_model(std::string id, int ports, std::int64_t cost_dollars, std::int64_t watts = 0,
                                          int rack_units = 1, Roles roles = {true, true}) {
  MonolithicSwitchModel m;
  m.id = std::move(id);
  m.name = m.id;
  m.ports = ports;
  m.cost = dollars(cost_dollars);
  m.power = fattree::watts(watts);
  m.rack_units = rack_units;
  m.roles = roles;
  return m;
}

/// One P-port model used for both layers.
inline Catalog single_model(int ports, std::int64_t cost_dollars = 11000, std::int64_t watts = 152) {
  return build_catalog("USD", {switch_model("sw" + std::to_string(ports), ports, cost_dollars, watts)}, {});
}

inline DesignRequest rack_request(int nodes, Rational blocking = Rational(1)) {
  DesignRequest r;
  r.node_count = nodes;
  r.blocking_factor = blocking;
  return r;
}

/// Fixed-seed generator for property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace fattree::test
