#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "poset/census.hpp"
#include "poset/realizability.hpp"
#include "poset/surgery.hpp"

using namespace poset;

namespace {

Poset diamond() {
  return Poset::build({"m", "a", "b", "t"}, {{"m", "a"}, {"m", "b"}, {"a", "t"}, {"b", "t"}});
}

Poset antichain2() { return Poset::build({"a", "b"}, {}); }

// Unique minimal 10, then a long arm 10 < 12 < 9 < 8 < 6 next to the short arm
// 10 < 7 < 6; node 7 sits at height 1 under a cover of height 4.
Poset figure_x() {
  return Poset::build({"10", "12", "9", "8", "6", "7"},
                      {{"10", "12"}, {"12", "9"}, {"9", "8"}, {"8", "6"}, {"10", "7"}, {"7", "6"}});
}

}  // namespace

TEST_CASE("the long-arm hexagon fails the local check with one bad cover") {
  RealizabilityReport r = check_local_ufd(figure_x());
  CHECK_FALSE(r.verdict);
  REQUIRE(r.violations.size() == 1);
  const Violation& v = r.violations[0];
  CHECK(v.kind == Violation::Kind::bad_cover);
  CHECK(v.nodes == std::vector<std::string>{"7", "6"});
  CHECK(v.heights == std::vector<std::size_t>{1, 4});
  CHECK(std::string(kind_name(v.kind)) == "BadCover");

  // same verdict without the maximal-count condition
  CHECK_FALSE(check_nonlocal_ufd(figure_x()).verdict);
}

TEST_CASE("points, chains and the diamond pass both checks") {
  for (const Poset& p : {Poset::build({"x"}, {}), Poset::build({"a", "b"}, {{"a", "b"}}),
                         diamond()}) {
    CHECK(check_local_ufd(p).verdict);
    CHECK(check_nonlocal_ufd(p).verdict);
  }
}

TEST_CASE("an antichain fails on minimal count, and locally on maximal count too") {
  RealizabilityReport local = check_local_ufd(antichain2());
  CHECK_FALSE(local.verdict);
  REQUIRE(local.violations.size() == 2);
  CHECK(local.violations[0].kind == Violation::Kind::multiple_minimal);
  CHECK(local.violations[0].nodes == std::vector<std::string>{"a", "b"});
  CHECK(local.violations[0].heights == std::vector<std::size_t>{0, 0});
  CHECK(local.violations[1].kind == Violation::Kind::multiple_maximal);

  RealizabilityReport nonlocal = check_nonlocal_ufd(antichain2());
  CHECK_FALSE(nonlocal.verdict);
  REQUIRE(nonlocal.violations.size() == 1);
  CHECK(nonlocal.violations[0].kind == Violation::Kind::multiple_minimal);
}

TEST_CASE("reports serialize to json") {
  CHECK(report_to_json(check_local_ufd(diamond())) ==
        "{\n  \"verdict\": true,\n  \"violations\": []\n}\n");

  auto j = nlohmann::json::parse(report_to_json(check_local_ufd(figure_x())));
  CHECK(j["verdict"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["kind"] == "BadCover");
  CHECK(j["violations"][0]["nodes"] == nlohmann::json({"7", "6"}));
  CHECK(j["violations"][0]["heights"] == nlohmann::json({1, 4}));
}

TEST_CASE("add_top and add_bottom append a fresh comparable node") {
  Poset v = Poset::build({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}});

  Augmentation top = add_top(v);
  CHECK(top.result.size() == 4);
  CHECK(top.result.dim() == v.dim() + 1);
  CHECK(top.result.maximals() == std::vector<NodeId>{top.result.node_or_throw("z")});
  CHECK(is_saturated_embedding(top.inclusion));

  Augmentation bottom = add_bottom(v);
  CHECK(bottom.result.dim() == v.dim() + 1);
  CHECK(bottom.result.minimals() == std::vector<NodeId>{bottom.result.node_or_throw("z")});
  CHECK(is_saturated_embedding(bottom.inclusion));

  // an existing z pushes the fresh label out of the way
  Poset taken = Poset::build({"z"}, {});
  Augmentation again = add_top(taken);
  CHECK(again.result.size() == 2);
  CHECK_FALSE(again.result.maximals() == std::vector<NodeId>{again.result.node_or_throw("z")});
}

TEST_CASE("risky minimals are those covered above height one") {
  CHECK(risky_minimals(diamond()).empty());
  CHECK(risky_minimals(figure_x()).empty());

  // m is covered by b, which sits at height 2 over the chain r < a
  Poset p = Poset::build({"r", "a", "b", "m"}, {{"r", "a"}, {"a", "b"}, {"m", "b"}});
  auto risky = risky_minimals(p);
  REQUIRE(risky.size() == 1);
  CHECK(p.label(risky[0]) == "m");
}

TEST_CASE("dim_plus_one duplicates risky minimals and adds a bottom") {
  Augmentation plain = dim_plus_one(antichain2());
  CHECK(plain.result.size() == 3);
  CHECK(plain.result.dim() == 1);
  CHECK(check_nonlocal_ufd(plain.result).verdict);
  CHECK(is_saturated_embedding(plain.inclusion));

  Poset p = Poset::build({"r", "a", "b", "m"}, {{"r", "a"}, {"a", "b"}, {"m", "b"}});
  Augmentation aug = dim_plus_one(p);
  CHECK(aug.result.size() == 6);  // m', plus the bottom
  CHECK(aug.result.dim() == p.dim() + 1);
  CHECK(is_saturated_embedding(aug.inclusion));

  // the duplicate sits strictly below m and below everything above m
  NodeId dup = aug.result.node_or_throw("m'");
  CHECK(aug.result.less(dup, aug.result.node_or_throw("m")));
  CHECK(aug.result.less(dup, aug.result.node_or_throw("b")));
  CHECK_FALSE(aug.result.leq(dup, aug.result.node_or_throw("a")));
  CHECK(check_nonlocal_ufd(aug.result).verdict);
}

TEST_CASE("dim_plus_one repairs every poset on up to four nodes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      Augmentation aug = dim_plus_one(p);
      CHECK(aug.result.dim() == p.dim() + 1);
      CHECK(is_saturated_embedding(aug.inclusion));
      CHECK(check_nonlocal_ufd(aug.result).verdict);
    }
  }
}

TEST_CASE("dim_plus_one can leave a bad cover behind on five nodes") {
  // r is the only risky minimal; duplicating it pushes r, y and w up while m
  // keeps height 1 under y, which lands at height 3.
  Poset x = Poset::build({"m", "r", "y", "d", "w"},
                         {{"m", "y"}, {"m", "d"}, {"r", "y"}, {"r", "w"}, {"d", "w"}});
  auto risky = risky_minimals(x);
  REQUIRE(risky.size() == 1);
  CHECK(x.label(risky[0]) == "r");

  Augmentation aug = dim_plus_one(x);
  CHECK(aug.result.dim() == x.dim() + 1);
  CHECK(is_saturated_embedding(aug.inclusion));

  RealizabilityReport r = check_nonlocal_ufd(aug.result);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::bad_cover);
  CHECK(r.violations[0].nodes == std::vector<std::string>{"m", "y"});
  CHECK(r.violations[0].heights == std::vector<std::size_t>{1, 3});
}

TEST_CASE("extension_poset pairs each height-one node with a fresh minimal") {
  ExtensionResult ext = extension_poset(diamond());
  CHECK(ext.extension.size() == 5);
  CHECK(ext.extension.dim() == diamond().dim());
  REQUIRE(ext.pairing.size() == 2);
  CHECK(ext.pairing[0] == std::pair<std::string, std::string>{"a'", "a"});
  CHECK(ext.pairing[1] == std::pair<std::string, std::string>{"b'", "b"});

  // the fresh minimals and the height-one anchors are in bijection
  std::vector<NodeId> mins = ext.extension.minimals();
  CHECK(mins.size() == ext.pairing.size());
  for (const auto& [dup, anchor] : ext.pairing) {
    NodeId d = ext.extension.node_or_throw(dup);
    NodeId a = ext.extension.node_or_throw(anchor);
    CHECK(ext.extension.upper_covers(d) == std::vector<NodeId>{a});
  }

  // gluing the fresh minimals back together recovers the input
  GluingResult back = glue(ext.extension, mins);
  CHECK(isomorphism(back.quotient, diamond()).has_value());
}

TEST_CASE("extension_poset rejects unsuitable inputs") {
  CHECK_THROWS_AS(extension_poset(antichain2()), Error);
  CHECK_THROWS_AS(extension_poset(Poset::build({"a", "b"}, {{"a", "b"}})), Error);
  try {
    extension_poset(Poset::build({"a", "b"}, {{"a", "b"}}));
  } catch (const Error& e) {
    CHECK(e.code() == errc::dimension_too_small);
  }
  try {
    extension_poset(antichain2());
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_unique_minimal);
  }
}
