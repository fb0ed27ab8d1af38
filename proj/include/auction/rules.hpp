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

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "auction/outcome.hpp"
#include "auction/tie_break.hpp"

namespace auction {

/// A named outcome function together with its conformance predicate. The
/// function must be total on valid bid profiles; the predicate states, for
/// given bids, which outcomes the rule admits at all (one per tied top
/// bidder), independently of which tie-break picked the winner.
struct AuctionRule {
  std::string name;
  std::function<Outcome(const Profile& bids, const TieBreakPolicy& policy)> run;
  std::function<bool(const Profile& bids, const Outcome& outcome)> conforms;
};

/// A highest bidder wins and pays the highest remaining bid; losers are
/// allocated nothing and pay nothing. Bids must be nonnegative.
Outcome second_price_outcome(const Profile& bids, const TieBreakPolicy& policy);

/// True iff the outcome has exactly one winner, the winner is a tied top
/// bidder paying the maximum over the other bids, and everyone else has
/// zero allocation and zero payment. Throws std::invalid_argument when the
/// bid and outcome participant sets differ.
bool is_second_price_outcome(const Profile& bids, const Outcome& outcome);

/// Negative control: a highest bidder wins and pays their own bid.
Outcome first_price_outcome(const Profile& bids, const TieBreakPolicy& policy);
bool is_first_price_outcome(const Profile& bids, const Outcome& outcome);

AuctionRule second_price_rule();
AuctionRule first_price_rule();
std::optional<AuctionRule> rule_by_name(std::string_view name);

/// u = v * x - p. May be negative (an overbidding winner can overpay).
Rational payoff(const Rational& valuation, bool wins, const Rational& payment);

/// Runs the rule on `bids` and returns participant i's payoff given their
/// valuation. Profiles must share one participant set.
Rational payoff_at(const AuctionRule& rule, const Profile& valuations, const Profile& bids,
                   const TieBreakPolicy& policy, ParticipantId i);

/// True iff the allocation has exactly one winner and that winner's
/// valuation is the top valuation; with a single good this is equivalent to
/// maximizing total realized valuation over single-winner allocations.
/// A tied-top loser does not make the outcome inefficient.
bool is_efficient(const Profile& valuations, const Allocation& allocation);

}  // namespace auction
