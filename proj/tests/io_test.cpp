#include "doctest.h"

#include <string>
#include <utility>
#include <vector>

#include "poset/io.hpp"

using namespace poset;

namespace {

const char* kDiamondText =
    "poset v1\n"
    "# the four-element diamond\n"
    "elements: m a b t\n"
    "rel: m a\n"
    "rel: m b\n"
    "rel: a t\n"
    "rel: b t\n";

std::string error_text(const std::string& text, bool strict_covers = false) {
  try {
    parse_poset(text, strict_covers);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_poset reads the diamond") {
  Poset d = parse_poset(kDiamondText);
  CHECK(d.size() == 4);
  CHECK(d.dim() == 2);
  CHECK(d.leq(d.node_or_throw("m"), d.node_or_throw("t")));
  CHECK_FALSE(d.leq(d.node_or_throw("a"), d.node_or_throw("b")));
}

TEST_CASE("emit_poset round-trips and normalises") {
  Poset d = parse_poset(kDiamondText);
  std::string out = emit_poset(d);
  CHECK(out ==
        "poset v1\n"
        "elements: m a b t\n"
        "rel: a t\n"
        "rel: b t\n"
        "rel: m a\n"
        "rel: m b\n");
  CHECK(parse_poset(out) == d);

  // a redundant generator disappears after a round trip
  Poset loose = parse_poset(
      "poset v1\n"
      "elements: x y z\n"
      "rel: x y\n"
      "rel: y z\n"
      "rel: x z\n");
  CHECK(emit_poset(loose) ==
        "poset v1\n"
        "elements: x y z\n"
        "rel: x y\n"
        "rel: y z\n");
}

TEST_CASE("parse_poset reports failures with line numbers") {
  CHECK(error_text("").find("line 1") != std::string::npos);
  CHECK(error_text("poset v2\nelements: a\n").find("line 1") != std::string::npos);
  CHECK(error_text("poset v1\n").find("elements") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a\nelements: b\n").find("line 3") != std::string::npos);
  CHECK(error_text("poset v1\nrel: a b\nelements: a b\n").find("line 2") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a\nrel: a b\n").find("line 3") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a b\nrel: a\n").find("line 3") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a b\nrel: a b c\n").find("line 3") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a:b\n").find("line 2") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a a\n").find("line 2") != std::string::npos);
  CHECK(error_text("poset v1\nelements: a b\nnonsense\n").find("line 3") != std::string::npos);
}

TEST_CASE("cycles surface as parse errors") {
  std::string text =
      "poset v1\n"
      "elements: a b\n"
      "rel: a b\n"
      "rel: b a\n";
  CHECK_THROWS_AS(parse_poset(text), Error);
  CHECK_FALSE(error_text(text).empty());
}

TEST_CASE("strict_covers rejects redundant generators") {
  std::string loose =
      "poset v1\n"
      "elements: x y z\n"
      "rel: x y\n"
      "rel: y z\n"
      "rel: x z\n";
  CHECK(parse_poset(loose).size() == 3);
  CHECK(error_text(loose, true).find("line 5") != std::string::npos);
}

TEST_CASE("comments and blank lines are ignored") {
  Poset p = parse_poset(
      "# leading comment\n"
      "poset v1\n"
      "\n"
      "elements: a b\n"
      "# middle\n"
      "rel: a b\n"
      "\n");
  CHECK(p.size() == 2);
  CHECK(p.dim() == 1);
}

TEST_CASE("parse_map reads pairs in file order") {
  auto pairs = parse_map(
      "map v1\n"
      "# collapse\n"
      "pair: b q\n"
      "pair: a p\n");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"b", "q"});
  CHECK(pairs[1] == std::pair<std::string, std::string>{"a", "p"});

  CHECK_THROWS_AS(parse_map("poset v1\n"), Error);
  CHECK_THROWS_AS(parse_map("map v1\npair: a p\npair: a q\n"), Error);
  CHECK_THROWS_AS(parse_map("map v1\npair: a\n"), Error);
}

TEST_CASE("emit_map lists domain nodes in label order") {
  Poset d = parse_poset(kDiamondText);
  PosetMap f = make_inclusion(d, d);
  CHECK(emit_map(f) ==
        "map v1\n"
        "pair: a a\n"
        "pair: b b\n"
        "pair: m m\n"
        "pair: t t\n");
}

TEST_CASE("render_dot produces a fixed Hasse diagram") {
  Poset d = parse_poset(kDiamondText);
  CHECK(render_dot(d) ==
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"m\";\n"
        "  \"t\";\n"
        "  { rank=same; \"m\"; }\n"
        "  { rank=same; \"a\"; \"b\"; }\n"
        "  { rank=same; \"t\"; }\n"
        "  \"a\" -> \"t\";\n"
        "  \"b\" -> \"t\";\n"
        "  \"m\" -> \"a\";\n"
        "  \"m\" -> \"b\";\n"
        "}\n");

  CHECK(render_dot(Poset::build({"x"}, {})) ==
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  \"x\";\n"
        "  { rank=same; \"x\"; }\n"
        "}\n");

  CHECK(render_dot(d) == render_dot(d));
}

TEST_CASE("read_file fails loudly on missing paths") {
  CHECK_THROWS_AS(read_file("/nonexistent/path/poset.txt"), Error);
}
