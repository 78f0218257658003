#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace fattree;
using fattree::test::data_catalog;

namespace {

ModularSwitchFamily case_study_family() {
  ModularSwitchFamily f;
  f.id = "chassis";
  f.chassis_cost = dollars(25000);
  f.chassis_rack_units = 6;
  f.fabric_board_cost = dollars(9000);
  f.fabric_boards_required = 3;
  f.line_card_cost = dollars(13000);
  f.ports_per_line_card = 18;
  f.max_line_cards = 6;
  f.roles = {false, true};
  return f;
}

std::string field_of(const std::string& doc) {
  try {
    load_catalog(std::string_view(doc));
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<no error>";
}

} // namespace

TEST(Catalog, SingleMonolithicModelInBothSets) {
  Catalog cat = data_catalog("demo_catalog.json");
  ASSERT_EQ(cat.edge_set.size(), 1u);
  ASSERT_EQ(cat.core_set.size(), 1u);
  EXPECT_EQ(cat.edge_set[0].ports, 36);
  EXPECT_EQ(cat.edge_set[0].cost, dollars(11000));
  EXPECT_EQ(cat.edge_set[0].expandable_ports, 0);
  EXPECT_FALSE(cat.edge_set[0].modular());
  EXPECT_EQ(cat.currency, "USD");
}

TEST(Catalog, ModularFamilyExpandsToSixCoreConfigs) {
  Catalog cat = data_catalog("case_study_catalog.json");
  std::vector<int> ports;
  for (const auto& c : cat.core_set)
    if (c.modular()) ports.push_back(c.ports);
  EXPECT_EQ(ports, (std::vector<int>{18, 36, 54, 72, 90, 108}));
  for (const auto& c : cat.edge_set) EXPECT_FALSE(c.modular());
}

TEST(Catalog, ExpandModularPrices) {
  auto configs = expand_modular(case_study_family());
  ASSERT_EQ(configs.size(), 6u);
  EXPECT_EQ(configs[5].ports, 108);
  EXPECT_EQ(configs[5].cost, dollars(130000));
  EXPECT_EQ(configs[5].expandable_ports, 0);
  EXPECT_EQ(configs[4].ports, 90);
  EXPECT_EQ(configs[4].cost, dollars(117000));
  EXPECT_EQ(configs[4].expandable_ports, 18);
  EXPECT_EQ(configs[4].id(), "chassis/5");
  EXPECT_EQ(configs[0].cost, dollars(25000 + 27000 + 13000));
}

TEST(Catalog, SingleCardFamilyIsItsFullConfiguration) {
  auto f = case_study_family();
  f.max_line_cards = 1;
  auto configs = expand_modular(f);
  ASSERT_EQ(configs.size(), 1u);
  EXPECT_EQ(configs[0].ports, 18);
  EXPECT_EQ(configs[0].expandable_ports, 0);
  EXPECT_EQ(configs[0].cost, dollars(25000 + 27000 + 13000));
}

TEST(Catalog, ModularPowerScalesWithCards) {
  auto f = case_study_family();
  f.chassis_power = watts(400);
  f.per_line_card_power = watts(150);
  f.chassis_weight = kilograms(50);
  f.per_line_card_weight = kilograms(5);
  auto configs = expand_modular(f);
  EXPECT_EQ(configs[2].power, watts(400 + 3 * 150));
  EXPECT_EQ(configs[2].weight, kilograms(65));
}

TEST(Catalog, ExpansionIsMonotone) {
  auto configs = expand_modular(case_study_family());
  for (std::size_t k = 1; k < configs.size(); ++k) {
    EXPECT_LT(configs[k - 1].cost, configs[k].cost);
    EXPECT_LT(configs[k - 1].ports, configs[k].ports);
  }
}

TEST(Catalog, PerPortMetrics) {
  auto m = per_port_metrics(data_catalog("demo_catalog.json").edge_set[0]);
  EXPECT_EQ(m.cost, Rational(1100000, 36));
  EXPECT_EQ(m.cost.to_decimal(0), "30556"); // cents
  EXPECT_EQ(m.power, Rational(152000, 36));
  EXPECT_EQ((m.power / Rational(1000)).to_decimal(3), "4.222");
  EXPECT_EQ(m.rack_units, Rational(1, 36));
}

TEST(Catalog, DeterministicOrder) {
  auto a = test::switch_model("zeta", 24, 5000);
  auto b = test::switch_model("alpha", 48, 9000);
  Catalog cat = build_catalog("USD", {a, b}, {case_study_family()});
  std::vector<std::string> ids;
  for (const auto& c : cat.core_set) ids.push_back(c.id());
  EXPECT_EQ(ids, (std::vector<std::string>{"alpha", "chassis/1", "chassis/2", "chassis/3", "chassis/4", "chassis/5",
                                           "chassis/6", "zeta"}));
}

TEST(Catalog, RoundTrip) {
  for (const char* name : {"demo_catalog.json", "case_study_catalog.json"}) {
    Catalog cat = data_catalog(name);
    Catalog again = load_catalog(catalog_to_json(cat));
    EXPECT_EQ(cat, again) << name;
  }
}

TEST(Catalog, EmptyDocument) {
  EXPECT_THROW(
      {
        try {
          load_catalog(std::string_view("{}"));
        } catch (const ValidationError& e) {
          EXPECT_NE(std::string(e.what()).find("catalog empty"), std::string::npos);
          throw;
        }
      },
      ValidationError);
  EXPECT_THROW(load_catalog(std::string_view(R"({"currency":"USD"})")), ValidationError);
}

TEST(Catalog, MissingCoreSet) {
  auto edge_only = test::switch_model("leaf", 36, 11000, 0, 1, {true, false});
  EXPECT_THROW(build_catalog("USD", {edge_only}, {}), ValidationError);
  Catalog star = build_catalog("USD", {edge_only}, {}, CatalogLoadOptions{true});
  EXPECT_EQ(star.edge_set.size(), 1u);
  EXPECT_TRUE(star.core_set.empty());
}

TEST(Catalog, DuplicateIdIsConflict) {
  auto a = test::switch_model("dup", 36, 11000);
  EXPECT_THROW(build_catalog("USD", {a, a}, {}), ConflictError);
  const char* doc = R"({"currency":"USD","monolithic":[
    {"id":"x","ports":36,"cost":1,"rack_units":1,"roles":["edge","core"]},
    {"id":"x","ports":24,"cost":1,"rack_units":1,"roles":["core"]}]})";
  EXPECT_THROW(load_catalog(std::string_view(doc)), ConflictError);
}

TEST(Catalog, SchemaErrorsNameTheField) {
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":[{"id":"a","ports":1,"cost":1,"rack_units":1,"roles":["edge"]}]})"),
            "$.monolithic[0].ports");
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":[{"id":"a","ports":36,"cost":-1,"rack_units":1,"roles":["edge"]}]})"),
            "$.monolithic[0].cost");
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":[{"id":"a","ports":36,"cost":1,"rack_units":1,"roles":[]}]})"),
            "$.monolithic[0].roles");
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":[{"id":"a","ports":36,"cost":1,"rack_units":1,"roles":["spine"]}]})"),
            "$.monolithic[0].roles");
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":[{"id":"a","ports":36,"cost":1,"rack_units":1,"roles":["edge"],"color":"red"}]})"),
            "$.monolithic[0].color");
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":[{"id":"a","ports":36,"cost":1,"rack_units":0,"roles":["edge"]}]})"),
            "$.monolithic[0].rack_units");
  EXPECT_EQ(field_of(R"({"currency":"USD","modular":[{"id":"m","chassis_cost":1,"chassis_rack_units":6,"fabric_board_cost":1,"fabric_boards_required":1,"line_card_cost":1,"ports_per_line_card":18,"max_line_cards":0,"roles":["core"]}]})"),
            "$.modular[0].max_line_cards");
  EXPECT_EQ(field_of(R"({"currency":"USD","monolithic":{}})"), "$.monolithic");
  EXPECT_EQ(field_of(R"({"monolithic":[]})"), "$.currency");
  EXPECT_EQ(field_of(R"({"currency":"USD","extra":1})"), "$.extra");
  EXPECT_EQ(field_of("{not json"), "$");
}

TEST(Catalog, EmbeddedSwitchMayTakeNoRackSpace) {
  Catalog cat = data_catalog("case_study_catalog.json");
  const SwitchConfig* sw = cat.find("blade-32");
  ASSERT_NE(sw, nullptr);
  EXPECT_TRUE(sw->blade_embedded);
  EXPECT_EQ(sw->rack_units, 0);
}
