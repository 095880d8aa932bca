#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "ttc/market_io.hpp"

using ttc::MarketFile;
using ttc::ParseError;

namespace {

MarketFile parse(const std::string& text) {
  std::istringstream in(text);
  return ttc::parse_market_file(in);
}

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    ttc::parse_market_file(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

int school_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    ttc::parse_school_file(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("fixtures parse to the in-code markets") {
  MarketFile two_cycle =
      ttc::parse_market_file(ts::fixture("two_cycle.market"));
  CHECK(two_cycle.agent_names ==
        std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(two_cycle.house_names ==
        std::vector<std::string>{"w1", "w2", "w3", "w4"});
  CHECK(two_cycle.market.endowment() == ts::houses({0, 1, 2, 3}));
  CHECK(two_cycle.market.profile() == ts::two_cycle_market().profile());
  REQUIRE(two_cycle.tiebreak.has_value());
  CHECK(*two_cycle.tiebreak == ts::two_cycle_tiebreak());
  REQUIRE(two_cycle.partition.has_value());
  CHECK(*two_cycle.partition == ts::part({{0}, {1, 2}, {3}}, 4));

  MarketFile pair = ttc::parse_market_file(ts::fixture("shared_top_pair.market"));
  CHECK(pair.market.profile() == ts::shared_top_pair_market().profile());
  CHECK(!pair.partition.has_value());

  MarketFile empty_core =
      ttc::parse_market_file(ts::fixture("empty_core.market"));
  CHECK(empty_core.market.profile() == ts::empty_core_market().profile());
  REQUIRE(empty_core.partition.has_value());
  CHECK(*empty_core.partition == ts::part({{0}, {1, 2}}, 3));

  MarketFile misreport =
      ttc::parse_market_file(ts::fixture("misreport_gain.market"));
  CHECK(misreport.market.profile() ==
        ts::misreport_gain_market().profile());
  REQUIRE(misreport.tiebreak.has_value());
  CHECK(*misreport.tiebreak == ts::ascending_tiebreak(3));
}

TEST_CASE("serialization is canonical and round-trips byte for byte") {
  MarketFile pair = ttc::parse_market_file(ts::fixture("shared_top_pair.market"));
  std::string expected =
      "agents: 1 2\n"
      "houses: w1 w2\n"
      "endowment: 1=w1 2=w2\n"
      "preferences 1: w1 w2\n"
      "preferences 2: w1 | w2\n"
      "tiebreak 1: 1 2\n"
      "tiebreak 2: 1 2\n";
  CHECK(ttc::serialize_market_file(pair) == expected);

  for (const char* name :
       {"two_cycle.market", "shared_top_pair.market", "empty_core.market",
        "misreport_gain.market"}) {
    MarketFile first = ttc::parse_market_file(ts::fixture(name));
    std::string once = ttc::serialize_market_file(first);
    MarketFile second = parse(once);
    CHECK(ttc::serialize_market_file(second) == once);
  }
}

TEST_CASE("endowment defaults to positional order") {
  MarketFile file = parse(
      "agents: x y\n"
      "houses: u v\n"
      "preferences x: u v\n"
      "preferences y: v | u\n");
  CHECK(file.market.endowment() == ts::houses({0, 1}));
  CHECK(!file.tiebreak.has_value());
}

TEST_CASE("explicit endowments may permute and are order-insensitive") {
  MarketFile file = parse(
      "agents: x y\n"
      "houses: u v\n"
      "endowment: y=u x=v\n"
      "preferences x: u v\n"
      "preferences y: v | u\n");
  CHECK(file.market.endowment() == ts::houses({1, 0}));
}

TEST_CASE("comments and blank lines are skipped") {
  MarketFile file = parse(
      "# header comment\n"
      "\n"
      "agents: x y\n"
      "houses: u v  # trailing comment\n"
      "preferences x: u v\n"
      "preferences y: v | u\n");
  CHECK(file.agent_names == std::vector<std::string>{"x", "y"});
  CHECK(file.house_names == std::vector<std::string>{"u", "v"});
}

TEST_CASE("market parse errors carry the offending line") {
  CHECK(parse_error_line("preferences 1: w1\n") == 1);
  CHECK(parse_error_line("agents: a a\n") == 1);
  CHECK(parse_error_line("agents: a|b\nhouses: u v\n") == 1);
  CHECK(parse_error_line("agents 1 2\n") == 1);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "preferences x: z\n") == 3);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "preferences x: u | | v\n") == 3);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "preferences x: u v\n"
                         "preferences x: u v\n") == 4);
  // Structural problems are reported against the last line read.
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "preferences x: u v\n") == 3);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "endowment: x=u y=u\n"
                         "preferences x: u v\n"
                         "preferences y: u v\n") == 5);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v w\n"
                         "preferences x: u v w\n"
                         "preferences y: u v w\n") == 4);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "preferences x: u v\n"
                         "preferences y: u v\n"
                         "tiebreak x: x y\n") == 5);
  CHECK(parse_error_line("agents: x y\n"
                         "houses: u v\n"
                         "preferences x: u\n") == 3);
}

TEST_CASE("messages name the problem") {
  std::istringstream in(
      "agents: x y\n"
      "houses: u v\n"
      "preferences x: u v\n"
      "preferences y: u v\n"
      "tiebreak x: x y\n");
  try {
    ttc::parse_market_file(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(
              "tiebreak orders cover only part of the agents") !=
          std::string::npos);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(ttc::parse_market_file("/nonexistent/market.txt"),
                  ParseError);
  CHECK_THROWS_AS(ttc::parse_school_file("/nonexistent/school.txt"),
                  ParseError);
}

TEST_CASE("tie-break files resolve against the market's agent names") {
  std::istringstream in(
      "tiebreak two: two one\n"
      "tiebreak one: one two\n");
  ttc::TieBreakProfile profile =
      ttc::parse_tiebreak_file(in, {"one", "two"});
  CHECK(profile.order_of(ttc::AgentId(0)) == ts::order({0, 1}));
  CHECK(profile.order_of(ttc::AgentId(1)) == ts::order({1, 0}));

  std::istringstream wrong_key("agents: one two\n");
  CHECK_THROWS_AS(ttc::parse_tiebreak_file(wrong_key, {"one", "two"}),
                  ParseError);

  std::istringstream partial("tiebreak one: one two\n");
  CHECK_THROWS_AS(ttc::parse_tiebreak_file(partial, {"one", "two"}),
                  ParseError);
}

TEST_CASE("school parse errors carry the offending line") {
  CHECK(school_error_line("capacities: A=1\n") == 1);
  CHECK(school_error_line("schools: A\n"
                          "capacities: A=x\n") == 2);
  CHECK(school_error_line("schools: A\n"
                          "students: a\n"
                          "seats: a=A.1\n") == 3);
  CHECK(school_error_line("schools: A\n"
                          "capacities: A=1\n"
                          "students: a\n"
                          "priority A: a\n"
                          "preferences a: A\n"
                          "seats: a=A.2\n") == 6);
  CHECK(school_error_line("schools: A\n"
                          "capacities: A=1\n"
                          "students: a\n"
                          "priority A: a\n"
                          "preferences a: A\n"
                          "seats: a=A1\n") == 6);
  // One student with no seat named while seats are in use.
  CHECK(school_error_line("schools: C\n"
                          "capacities: C=2\n"
                          "students: a b\n"
                          "priority C: a b\n"
                          "preferences a: C\n"
                          "preferences b: C\n"
                          "seats: a=C.1\n") == 7);
  // Missing priority line for a declared school.
  CHECK(school_error_line("schools: A\n"
                          "capacities: A=1\n"
                          "students: a\n"
                          "preferences a: A\n") == 4);
}
