#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "primrose/instance_io.hpp"

using namespace primrose;
using Catch::Matchers::ContainsSubstring;
using test_helpers::data_path;

TEST_CASE("fixtures parse and round-trip through the canonical form", "[io]") {
  const char* names[] = {"ex21_primal.inst", "ex31.inst",       "ex31_alt1.inst",
                         "ex31_alt2.inst",   "ex32.inst",       "ex33.inst",
                         "ex34.inst",        "ex36.inst",       "ex39.inst",
                         "ex39_alt.inst",    "ex311.inst",      "ex311_alt1.inst",
                         "ex311_alt2.inst",  "ex313.inst",      "ex313_alt.inst",
                         "defconv.inst",     "s5.inst"};
  for (const char* name : names) {
    INFO(name);
    Instance inst = load_instance(data_path(name));
    std::string text = serialize_instance(inst);
    Instance again = parse_instance(text);
    CHECK(inst == again);
    CHECK(serialize_instance(again) == text);
  }
}

TEST_CASE("antichain seeds expand to the same family as explicit members", "[io]") {
  Instance from_antichain = parse_instance(
      "universe = i1 i2 i3 i4\n"
      "pairs =\n"
      "primal.mode = weak\n"
      "primal.antichain = {i1,i3} {i2,i3}\n");
  Instance from_members = parse_instance(
      "universe = i1 i2 i3 i4\n"
      "pairs =\n"
      "primal.mode = weak\n"
      "primal.members = {} {i1} {i2} {i3} {i1,i3} {i2,i3}\n");
  CHECK(from_antichain == from_members);
}

TEST_CASE("comments, blank lines and repeated pairs lines are accepted", "[io]") {
  Instance inst = parse_instance(
      "# heading\n"
      "\n"
      "universe = a b\n"
      "pairs = (a,a)\n"
      "pairs = (a,b)\n"
      "# trailing comment\n");
  std::vector<std::pair<std::size_t, std::size_t>> expect{{0, 0}, {0, 1}};
  CHECK(inst.relation.pairs() == expect);
  CHECK_FALSE(inst.primal.has_value());
}

TEST_CASE("serialization is canonical", "[io]") {
  Instance inst = parse_instance(
      "universe = a b c\n"
      "pairs = (c,a) (a,a)\n"
      "primal.mode = weak\n"
      "primal.antichain = {b}\n");
  CHECK(serialize_instance(inst) ==
        "universe = a b c\n"
        "pairs = (a,a) (c,a)\n"
        "primal.mode = weak\n"
        "primal.members = {} {b}\n");
}

TEST_CASE("parse errors carry line numbers", "[io]") {
  CHECK_THROWS_WITH(parse_instance("pairs = (a,b)\n"), ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(parse_instance("universe = a\nnonsense\n"), ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(parse_instance("universe = a\npairs = (a\n"), ContainsSubstring("malformed pair"));
  CHECK_THROWS_WITH(parse_instance("universe = a b\npairs = (a,z)\n"),
                    ContainsSubstring("outside the universe"));
}

TEST_CASE("structure errors are reported", "[io]") {
  // Missing universe entirely.
  CHECK_THROWS_AS(parse_instance("# nothing\n"), ParseError);
  // Duplicate universe line.
  CHECK_THROWS_AS(parse_instance("universe = a\nuniverse = b\n"), ParseError);
  // Mode without a family and family without a mode.
  CHECK_THROWS_AS(parse_instance("universe = a b\nprimal.mode = weak\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("universe = a b\nprimal.members = {}\n"), ParseError);
  // members and antichain are mutually exclusive.
  CHECK_THROWS_AS(parse_instance("universe = a b\n"
                                 "primal.mode = weak\n"
                                 "primal.members = {}\n"
                                 "primal.antichain = {a}\n"),
                  ParseError);
  // Unknown keys and bad mode values.
  CHECK_THROWS_AS(parse_instance("universe = a\nrelation = x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("universe = a b\n"
                                 "primal.mode = loose\n"
                                 "primal.members = {}\n"),
                  ParseError);
  // Reserved characters in labels.
  CHECK_THROWS_AS(parse_instance("universe = a{b\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("universe = a=b\n"), ParseError);
}

TEST_CASE("invalid families are rejected at parse time", "[io]") {
  // Not downward closed.
  CHECK_THROWS_WITH(parse_instance("universe = a b\n"
                                   "primal.mode = weak\n"
                                   "primal.members = {a,b}\n"),
                    ContainsSubstring("primal rejected"));
  // Contains the whole universe.
  CHECK_THROWS_AS(parse_instance("universe = a\n"
                                 "primal.mode = weak\n"
                                 "primal.members = {} {a}\n"),
                  ParseError);
  // Fails the strict splitting axiom.
  CHECK_THROWS_AS(parse_instance("universe = a b\n"
                                 "primal.mode = strict\n"
                                 "primal.members = {}\n"),
                  ParseError);
  CHECK_NOTHROW(parse_instance("universe = a b\n"
                               "primal.mode = weak\n"
                               "primal.members = {}\n"));
}

TEST_CASE("missing files are parse errors naming the path", "[io]") {
  CHECK_THROWS_WITH(load_instance(data_path("no_such.inst")), ContainsSubstring("no_such.inst"));
}

TEST_CASE("the empty set literal parses", "[io]") {
  Instance inst = parse_instance(
      "universe = a b\n"
      "primal.mode = weak\n"
      "primal.members = {} {a}\n");
  REQUIRE(inst.primal.has_value());
  CHECK(inst.primal->family().size() == 2);
}
