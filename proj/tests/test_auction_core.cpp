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
#include <vector>

#include "auction/rules.hpp"
#include "oracle.hpp"

using auction::Allocation;
using auction::AuctionRule;
using auction::first_price_outcome;
using auction::first_price_rule;
using auction::format_outcome;
using auction::is_efficient;
using auction::is_first_price_outcome;
using auction::is_second_price_outcome;
using auction::maximum_except;
using auction::Outcome;
using auction::ParticipantId;
using auction::ParticipantSet;
using auction::payoff;
using auction::payoff_at;
using auction::Profile;
using auction::Rational;
using auction::rule_by_name;
using auction::second_price_outcome;
using auction::second_price_rule;
using auction::TieBreakPolicy;

namespace {

Profile make(std::vector<Rational> values) {
  const std::size_t count = values.size();
  return Profile(ParticipantSet::contiguous(count), std::move(values));
}

Outcome winner_paying(const ParticipantSet& set, ParticipantId winner, const Rational& price) {
  std::vector<Rational> payments(set.size(), Rational(0));
  payments[set.index_of(winner)] = price;
  return Outcome(Allocation::single_winner(set, winner), Profile(set, std::move(payments)));
}

const TieBreakPolicy kLowest = TieBreakPolicy::lowest_id();
const TieBreakPolicy kHighest = TieBreakPolicy::highest_id();

}  // namespace

TEST_CASE("second price charges the highest remaining bid") {
  const Outcome outcome = second_price_outcome(make({Rational(3), Rational(1), Rational(2)}),
                                               kLowest);
  CHECK(outcome.allocation.unique_winner() == ParticipantId{0});
  CHECK(outcome.payments.at(0) == 2);
  CHECK(outcome.payments.at(1) == 0);
  CHECK(outcome.payments.at(2) == 0);
  CHECK(format_outcome(outcome) == "allocation: 1,0,0\npayments: 2,0,0\n");
}

TEST_CASE("second price resolves top ties through the policy") {
  const Profile bids = make({Rational(10), Rational(20), Rational(20)});
  const Outcome outcome = second_price_outcome(bids, kLowest);
  CHECK(outcome.allocation.unique_winner() == ParticipantId{1});
  CHECK(outcome.payments.at(1) == 20);
  CHECK(format_outcome(outcome) == "allocation: 0,1,0\npayments: 0,20,0\n");
  CHECK(second_price_outcome(bids, kHighest).allocation.unique_winner() == ParticipantId{2});
}

TEST_CASE("all-zero bids clear at a zero price") {
  const Outcome outcome = second_price_outcome(make({Rational(0), Rational(0)}), kLowest);
  CHECK(outcome.allocation.unique_winner() == ParticipantId{0});
  CHECK(outcome.payments.at(0) == 0);
}

TEST_CASE("negative bids are rejected") {
  CHECK_THROWS_AS(second_price_outcome(make({Rational(-1), Rational(0)}), kLowest),
                  std::invalid_argument);
  CHECK_THROWS_AS(first_price_outcome(make({Rational(0), Rational(-1)}), kLowest),
                  std::invalid_argument);
}

TEST_CASE("second price conformance accepts each tied winner and nothing else") {
  const ParticipantSet set = ParticipantSet::contiguous(3);
  const Profile bids = make({Rational(3), Rational(1), Rational(2)});
  CHECK(is_second_price_outcome(bids, winner_paying(set, 0, Rational(2))));
  CHECK_FALSE(is_second_price_outcome(bids, winner_paying(set, 1, Rational(3))));
  CHECK_FALSE(is_second_price_outcome(bids, winner_paying(set, 0, Rational(3))));

  const ParticipantSet pair = ParticipantSet::contiguous(2);
  const Profile tied = make({Rational(2), Rational(2)});
  CHECK(is_second_price_outcome(tied, winner_paying(pair, 1, Rational(2))));
  CHECK(is_second_price_outcome(tied, winner_paying(pair, 0, Rational(2))));

  const Outcome degenerate(Allocation(pair, {1, 1}),
                           Profile(pair, {Rational(2), Rational(2)}));
  CHECK_FALSE(is_second_price_outcome(tied, degenerate));

  const ParticipantSet other({0, 1, 2, 3});
  CHECK_THROWS_AS(is_second_price_outcome(bids, winner_paying(other, 0, Rational(2))),
                  std::invalid_argument);
}

TEST_CASE("conforming second price outcomes number exactly the tied top bidders") {
  const auction::BidGrid grid({Rational(0), Rational(1), Rational(2)});
  const ParticipantSet set = ParticipantSet::contiguous(3);
  for (const Profile& bids : oracle::all_profiles(grid, set)) {
    const std::vector<ParticipantId> tied = oracle::top_bidders(bids);
    std::size_t conforming = 0;
    for (const ParticipantId candidate : set.ids()) {
      const Outcome outcome =
          winner_paying(set, candidate, maximum_except(bids, candidate));
      if (is_second_price_outcome(bids, outcome)) {
        ++conforming;
        CHECK(std::find(tied.begin(), tied.end(), candidate) != tied.end());
      }
    }
    CHECK(conforming == tied.size());
  }
}

TEST_CASE("payoff follows the valuation-times-allocation-minus-payment formula") {
  CHECK(payoff(Rational(5), true, Rational(3)) == 2);
  CHECK(payoff(Rational(5), false, Rational(0)) == 0);
  CHECK(payoff(Rational(1), true, Rational(2)) == -1);
}

TEST_CASE("payoff_at runs the rule and prices participant i") {
  const AuctionRule rule = second_price_rule();
  const Profile v = make({Rational(2), Rational(1)});
  CHECK(payoff_at(rule, v, make({Rational(2), Rational(1)}), kLowest, 0) == 1);
  CHECK(payoff_at(rule, v, make({Rational(2), Rational(1)}), kLowest, 1) == 0);
  CHECK(payoff_at(rule, v, make({Rational(0), Rational(1)}), kLowest, 0) == 0);
}

TEST_CASE("efficiency means a winner with a top valuation") {
  const ParticipantSet set = ParticipantSet::contiguous(3);
  const Profile v = make({Rational(3), Rational(1), Rational(2)});
  CHECK(is_efficient(v, Allocation::single_winner(set, 0)));
  CHECK_FALSE(is_efficient(v, Allocation::single_winner(set, 1)));

  const ParticipantSet pair = ParticipantSet::contiguous(2);
  CHECK(is_efficient(make({Rational(2), Rational(2)}), Allocation::single_winner(pair, 1)));
  CHECK_FALSE(is_efficient(make({Rational(1), Rational(2)}), Allocation(pair, {1, 1})));
  CHECK_FALSE(is_efficient(make({Rational(1), Rational(2)}), Allocation(pair, {0, 0})));
}

TEST_CASE("efficiency agrees with total-value maximization on every profile") {
  const auction::BidGrid grid({Rational(0), Rational(1), Rational(2)});
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    const ParticipantSet set = ParticipantSet::contiguous(n);
    for (const Profile& v : oracle::all_profiles(grid, set)) {
      for (const ParticipantId winner : set.ids()) {
        const Allocation allocation = Allocation::single_winner(set, winner);
        CHECK(is_efficient(v, allocation) == oracle::efficient_by_total_value(v, allocation));
      }
    }
  }
}

TEST_CASE("first price charges the winner their own bid") {
  const Outcome a = first_price_outcome(make({Rational(3), Rational(1)}), kLowest);
  CHECK(a.allocation.unique_winner() == ParticipantId{0});
  CHECK(a.payments.at(0) == 3);

  const Outcome b = first_price_outcome(make({Rational(2), Rational(2)}), kLowest);
  CHECK(b.allocation.unique_winner() == ParticipantId{0});
  CHECK(b.payments.at(0) == 2);

  const Outcome c = first_price_outcome(make({Rational(0), Rational(1)}), kLowest);
  CHECK(c.allocation.unique_winner() == ParticipantId{1});
  CHECK(c.payments.at(0) == 0);
  CHECK(c.payments.at(1) == 1);
  CHECK(is_first_price_outcome(make({Rational(0), Rational(1)}), c));
}

TEST_CASE("rules are reachable by name") {
  CHECK(rule_by_name("second_price").has_value());
  CHECK(rule_by_name("first_price").has_value());
  CHECK_FALSE(rule_by_name("third_price").has_value());
  CHECK(second_price_rule().name == "second_price");
  CHECK(first_price_rule().name == "first_price");
}

TEST_CASE("tie-break policies always pick a tied top bidder deterministically") {
  const auction::BidGrid grid({Rational(0), Rational(1), Rational(3) / 2});
  const ParticipantSet set = ParticipantSet::contiguous(3);
  const std::vector<TieBreakPolicy> policies = {kLowest, kHighest,
                                                TieBreakPolicy::seeded_pseudorandom(42),
                                                TieBreakPolicy::seeded_pseudorandom(7)};
  for (const Profile& bids : oracle::all_profiles(grid, set)) {
    const std::vector<ParticipantId> tied = oracle::top_bidders(bids);
    for (const TieBreakPolicy& policy : policies) {
      const ParticipantId chosen = policy.select(tied, bids);
      CHECK(std::find(tied.begin(), tied.end(), chosen) != tied.end());
      CHECK(policy.select(tied, bids) == chosen);
    }
    CHECK(kLowest.select(tied, bids) == tied.front());
    CHECK(kHighest.select(tied, bids) == tied.back());
  }
}

TEST_CASE("seeded selections are frozen against accidental hash changes") {
  const Profile pair_tie = make({Rational(1), Rational(1)});
  const std::vector<ParticipantId> pair_top = {0, 1};
  CHECK(TieBreakPolicy::seeded_pseudorandom(42).select(pair_top, pair_tie) == 0);
  CHECK(TieBreakPolicy::seeded_pseudorandom(7).select(pair_top, pair_tie) == 1);

  const Profile triple_tie = make({Rational(2), Rational(2), Rational(2)});
  const std::vector<ParticipantId> triple_top = {0, 1, 2};
  CHECK(TieBreakPolicy::seeded_pseudorandom(42).select(triple_top, triple_tie) == 2);
  CHECK(TieBreakPolicy::seeded_pseudorandom(7).select(triple_top, triple_tie) == 0);

  const Profile partial_tie = make({Rational(2), Rational(2), Rational(1)});
  CHECK(TieBreakPolicy::seeded_pseudorandom(42).select({0, 1}, partial_tie) == 0);
}

TEST_CASE("policy names round-trip through from_name") {
  for (const TieBreakPolicy& policy :
       {kLowest, kHighest, TieBreakPolicy::seeded_pseudorandom(42)}) {
    const auto rebuilt = TieBreakPolicy::from_name(policy.name());
    REQUIRE(rebuilt.has_value());
    CHECK(*rebuilt == policy);
  }
  CHECK(TieBreakPolicy::seeded_pseudorandom(42).name() == "seeded_pseudorandom(42)");
  CHECK_FALSE(TieBreakPolicy::from_name("coin_flip").has_value());
  CHECK_FALSE(TieBreakPolicy::from_name("seeded_pseudorandom(x)").has_value());
}

TEST_CASE("rule outcomes match the naive oracle on every grid profile") {
  const auction::BidGrid grid({Rational(0), Rational(1) / 2, Rational(2)});
  const ParticipantSet set = ParticipantSet::contiguous(3);
  const std::vector<TieBreakPolicy> policies = {kLowest, kHighest,
                                                TieBreakPolicy::seeded_pseudorandom(42)};
  for (const Profile& bids : oracle::all_profiles(grid, set)) {
    for (const TieBreakPolicy& policy : policies) {
      CHECK(second_price_outcome(bids, policy) == oracle::second_price(bids, policy));
      CHECK(first_price_outcome(bids, policy) == oracle::first_price(bids, policy));
    }
  }
}

TEST_CASE("every second price outcome satisfies its own conformance predicate") {
  const auction::BidGrid grid({Rational(0), Rational(1), Rational(3) / 2});
  const ParticipantSet set = ParticipantSet::contiguous(3);
  const std::vector<TieBreakPolicy> policies = {kLowest, kHighest,
                                                TieBreakPolicy::seeded_pseudorandom(42)};
  for (const Profile& bids : oracle::all_profiles(grid, set)) {
    for (const TieBreakPolicy& policy : policies) {
      const Outcome outcome = second_price_outcome(bids, policy);
      CHECK(is_second_price_outcome(bids, outcome));

      const ParticipantId winner = *outcome.allocation.unique_winner();
      CHECK(outcome.payments.at(winner) == maximum_except(bids, winner));
      CHECK(outcome.payments.at(winner) <= bids.at(winner));
      for (const ParticipantId id : set.ids()) {
        if (id != winner) {
          CHECK_FALSE(outcome.allocation.wins(id));
          CHECK(outcome.payments.at(id) == 0);
        }
      }

      CHECK(is_efficient(bids, outcome.allocation));
    }
  }
}

TEST_CASE("scaling all bids by a positive rational scales payments and payoffs") {
  const auction::BidGrid grid({Rational(0), Rational(1), Rational(2)});
  const ParticipantSet set = ParticipantSet::contiguous(2);
  const Rational scale = Rational(3) / 2;
  for (const Profile& bids : oracle::all_profiles(grid, set)) {
    std::vector<Rational> scaled_values;
    for (const Rational& value : bids.values()) {
      scaled_values.push_back(value * scale);
    }
    const Profile scaled(set, scaled_values);
    for (const TieBreakPolicy& policy : {kLowest, kHighest}) {
      const Outcome base = second_price_outcome(bids, policy);
      const Outcome big = second_price_outcome(scaled, policy);
      CHECK(base.allocation == big.allocation);
      for (const ParticipantId id : set.ids()) {
        CHECK(big.payments.at(id) == base.payments.at(id) * scale);
      }
      for (const ParticipantId id : set.ids()) {
        CHECK(payoff_at(second_price_rule(), scaled, scaled, policy, id) ==
              payoff_at(second_price_rule(), bids, bids, policy, id) * scale);
      }
    }
  }
}
