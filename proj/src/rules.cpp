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

#include "auction/rules.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace auction {

namespace {

void require_valid_bids(const Profile& bids) {
  if (!all_nonnegative(bids)) throw std::invalid_argument("bids must be nonnegative");
}

ParticipantId pick_winner(const Profile& bids, const TieBreakPolicy& policy) {
  const auto tied = argmax_set(bids);
  const ParticipantId winner = policy.select(tied, bids);
  if (!std::binary_search(tied.begin(), tied.end(), winner)) {
    throw std::logic_error("tie-break policy selected a non-maximal bidder");
  }
  return winner;
}

Outcome single_winner_outcome(const Profile& bids, ParticipantId winner, Rational price) {
  const auto& set = bids.participants();
  std::vector<Rational> payments(set.size(), Rational(0));
  payments[set.index_of(winner)] = std::move(price);
  return Outcome(Allocation::single_winner(set, winner), Payments(set, std::move(payments)));
}

void require_same_set(const Profile& bids, const Outcome& outcome) {
  if (!(bids.participants() == outcome.allocation.participants())) {
    throw std::invalid_argument("bids and outcome must share one participant set");
  }
}

// Shared shape of both sealed-bid predicates: exactly one winner, winner in
// the argmax set, winner pays `expected_price(winner)`, everyone else has
// zero allocation and zero payment.
template <typename PriceFn>
bool conforms_single_winner(const Profile& bids, const Outcome& outcome,
                            PriceFn&& expected_price) {
  require_same_set(bids, outcome);
  const auto winner = outcome.allocation.unique_winner();
  if (!winner.has_value()) return false;
  const auto tied = argmax_set(bids);
  if (!std::binary_search(tied.begin(), tied.end(), *winner)) return false;
  if (outcome.payments.at(*winner) != expected_price(*winner)) return false;
  for (std::size_t k = 0; k < bids.size(); ++k) {
    const ParticipantId id = bids.participants().ids()[k];
    if (id == *winner) continue;
    if (outcome.payments.at_index(k) != 0) return false;
  }
  return true;
}

}  // namespace

Outcome second_price_outcome(const Profile& bids, const TieBreakPolicy& policy) {
  require_valid_bids(bids);
  const ParticipantId winner = pick_winner(bids, policy);
  return single_winner_outcome(bids, winner, maximum_except(bids, winner));
}

bool is_second_price_outcome(const Profile& bids, const Outcome& outcome) {
  return conforms_single_winner(bids, outcome,
                                [&](ParticipantId w) { return maximum_except(bids, w); });
}

Outcome first_price_outcome(const Profile& bids, const TieBreakPolicy& policy) {
  require_valid_bids(bids);
  const ParticipantId winner = pick_winner(bids, policy);
  return single_winner_outcome(bids, winner, bids.at(winner));
}

bool is_first_price_outcome(const Profile& bids, const Outcome& outcome) {
  return conforms_single_winner(bids, outcome, [&](ParticipantId w) { return bids.at(w); });
}

AuctionRule second_price_rule() {
  return AuctionRule{"second_price", second_price_outcome, is_second_price_outcome};
}

AuctionRule first_price_rule() {
  return AuctionRule{"first_price", first_price_outcome, is_first_price_outcome};
}

std::optional<AuctionRule> rule_by_name(std::string_view name) {
  if (name == "second_price") return second_price_rule();
  if (name == "first_price") return first_price_rule();
  return std::nullopt;
}

Rational payoff(const Rational& valuation, bool wins, const Rational& payment) {
  return (wins ? valuation : Rational(0)) - payment;
}

Rational payoff_at(const AuctionRule& rule, const Profile& valuations, const Profile& bids,
                   const TieBreakPolicy& policy, ParticipantId i) {
  if (!(valuations.participants() == bids.participants())) {
    throw std::invalid_argument("valuations and bids must share one participant set");
  }
  const Outcome outcome = rule.run(bids, policy);
  return payoff(valuations.at(i), outcome.allocation.wins(i), outcome.payments.at(i));
}

bool is_efficient(const Profile& valuations, const Allocation& allocation) {
  if (!(valuations.participants() == allocation.participants())) {
    throw std::invalid_argument("valuations and allocation must share one participant set");
  }
  const auto winner = allocation.unique_winner();
  if (!winner.has_value()) return false;
  return valuations.at(*winner) == maximum(valuations);
}

}  // namespace auction
