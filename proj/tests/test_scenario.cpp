// Copyright 2026 The Auctool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "auction/scenario.hpp"

using auction::BidGrid;
using auction::parse_scenario;
using auction::Profile;
using auction::Rational;
using auction::ScenarioError;
using auction::ScenarioFile;
using auction::serialize_scenario;

namespace {

ScenarioError capture(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e;
  }
  FAIL("expected a scenario error for: ", text);
  return ScenarioError(0, "", "unreachable");
}

}  // namespace

TEST_CASE("a minimal scenario parses into its parts") {
  const ScenarioFile scenario = parse_scenario(
      "auction = second_price\n"
      "participants = 2\n"
      "tie_break = lowest_id\n"
      "grid = 0, 1/2, 1\n"
      "valuations = 1, 1/2");
  CHECK(scenario.rule_name == "second_price");
  CHECK(scenario.participants == 2);
  CHECK(scenario.tie_break_kind == "lowest_id");
  CHECK_FALSE(scenario.seed.has_value());
  CHECK(scenario.grid == BidGrid({Rational(0), Rational(1) / 2, Rational(1)}));
  REQUIRE(scenario.valuations.has_value());
  CHECK(scenario.valuations->at(0) == 1);
  CHECK(scenario.valuations->at(1) == Rational(1) / 2);
  CHECK_FALSE(scenario.bids.has_value());
  CHECK(scenario.rule().name == "second_price");
  CHECK(scenario.tie_break(99).name() == "lowest_id");
}

TEST_CASE("comments, blank lines and carriage returns are tolerated") {
  const ScenarioFile scenario = parse_scenario(
      "# sealed-bid example\r\n"
      "auction = first_price\r\n"
      "\r\n"
      "participants = 3   # three bidders\r\n"
      "grid = 0, 1\r\n"
      "bids = 0, 1, 0\r\n");
  CHECK(scenario.rule_name == "first_price");
  CHECK(scenario.participants == 3);
  REQUIRE(scenario.bids.has_value());
  CHECK(scenario.bids->at(1) == 1);
  CHECK_FALSE(scenario.valuations.has_value());
}

TEST_CASE("tie_break defaults to lowest_id and accepts every written form") {
  const std::string base = "auction = second_price\nparticipants = 2\ngrid = 0, 1\n";

  CHECK(parse_scenario(base).tie_break_kind == "lowest_id");
  CHECK(parse_scenario(base + "tie_break = highest_id\n").tie_break(0).name() == "highest_id");

  const ScenarioFile bare = parse_scenario(base + "tie_break = seeded_pseudorandom\n");
  CHECK(bare.tie_break_kind == "seeded_pseudorandom");
  CHECK_FALSE(bare.seed.has_value());
  CHECK(bare.tie_break(7).name() == "seeded_pseudorandom(7)");

  const ScenarioFile parens = parse_scenario(base + "tie_break = seeded_pseudorandom(42)\n");
  CHECK(parens.seed == 42);
  CHECK(parens.tie_break(7).name() == "seeded_pseudorandom(42)");

  const ScenarioFile spaced = parse_scenario(base + "tie_break = seeded_pseudorandom 42\n");
  CHECK(spaced.seed == 42);
}

TEST_CASE("too few participants is rejected with the offending line") {
  const ScenarioError e = capture("auction = second_price\nparticipants = 1\n");
  CHECK(e.line() == 2);
  CHECK(e.field() == "participants");
  CHECK(std::string(e.what()) == "line 2, participants: participants must be >= 2, got 1");
}

TEST_CASE("a non-ascending grid is rejected") {
  const ScenarioError e =
      capture("auction = second_price\nparticipants = 2\ngrid = 1, 1, 2\n");
  CHECK(e.line() == 3);
  CHECK(e.field() == "grid");
  CHECK(std::string(e.what()) == "line 3, grid: grid values must be distinct ascending");
}

TEST_CASE("each malformed field names its line and key") {
  CHECK(std::string(capture("auction = third_price\n").what()) ==
        "line 1, auction: unknown auction rule \"third_price\"");
  CHECK(std::string(capture("participants = two\n").what()) ==
        "line 1, participants: malformed participant count \"two\"");
  CHECK(std::string(capture("auction = second_price\nparticipants = 2\ngrid = 0, abc\n")
                        .what()) == "line 3, grid: malformed rational: \"abc\"");
  CHECK(std::string(capture("tie_break = coin_flip\n").what()) ==
        "line 1, tie_break: unknown tie-break policy \"coin_flip\"");
  CHECK(std::string(capture("tie_break = seeded_pseudorandom(x)\n").what()) ==
        "line 1, tie_break: malformed seed \"x\"");
  CHECK(std::string(capture("color = red\n").what()) == "line 1, color: unknown key");
  CHECK(std::string(capture("auction = second_price\nauction = first_price\n").what()) ==
        "line 2, auction: duplicate key");
  CHECK(std::string(capture("auction second_price\n").what()) ==
        "line 1: expected key = value, got \"auction second_price\"");
}

TEST_CASE("missing required keys are reported without a line number") {
  const ScenarioError no_auction = capture("participants = 2\ngrid = 0, 1\n");
  CHECK(no_auction.line() == 0);
  CHECK(no_auction.field() == "auction");
  CHECK(std::string(no_auction.what()) == "auction: scenario is missing required key");

  CHECK(capture("auction = second_price\ngrid = 0, 1\n").field() == "participants");
  CHECK(capture("auction = second_price\nparticipants = 2\n").field() == "grid");
}

TEST_CASE("profiles must match the participant count and stay on the grid") {
  const std::string base = "auction = second_price\nparticipants = 3\ngrid = 0, 1\n";

  const ScenarioError short_profile = capture(base + "valuations = 0, 1\n");
  CHECK(short_profile.line() == 4);
  CHECK(short_profile.field() == "valuations");
  CHECK(std::string(short_profile.what()) == "line 4, valuations: expected 3 entries, got 2");

  const ScenarioError off_grid = capture(base + "bids = 0, 3/4, 1\n");
  CHECK(off_grid.field() == "bids");
  CHECK(std::string(off_grid.what()) == "line 4, bids: entry 3/4 is not on the grid");
}

TEST_CASE("rule and policy lookups on hand-built scenarios can still fail") {
  ScenarioFile scenario{"nonsense", 2, BidGrid({Rational(0)}), "nonsense", std::nullopt,
                        std::nullopt, std::nullopt};
  CHECK_THROWS_AS(scenario.rule(), std::invalid_argument);
  CHECK_THROWS_AS(scenario.tie_break(0), std::invalid_argument);
}

TEST_CASE("serialization round-trips through the parser") {
  const ScenarioFile original = parse_scenario(
      "auction = first_price\n"
      "participants = 2\n"
      "tie_break = seeded_pseudorandom(9)\n"
      "grid = 0, 1/2, 1\n"
      "valuations = 1, 1/2\n"
      "bids = 0, 1/2\n");
  const std::string text = serialize_scenario(original);
  CHECK(text ==
        "auction = first_price\n"
        "participants = 2\n"
        "tie_break = seeded_pseudorandom(9)\n"
        "grid = 0, 1/2, 1\n"
        "valuations = 1, 1/2\n"
        "bids = 0, 1/2\n");
  CHECK(parse_scenario(text) == original);

  const ScenarioFile sparse = parse_scenario("auction = second_price\nparticipants = 4\ngrid = 0, 2\n");
  CHECK(parse_scenario(serialize_scenario(sparse)) == sparse);
  CHECK_FALSE(sparse == original);
}
