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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auction/grid.hpp"
#include "auction/rules.hpp"

namespace auction {

// Bounded exhaustive verification over finite bid grids.
//
// Every check quantifies deviations (and, for the sweeps, valuations) over
// grid^n only, never over all reals, and every report states its grid, so a
// verdict never claims more than grid-exhaustiveness. Searches enumerate the
// product space in id-major rank order and return the lexicographically
// first counterexample: ordered by participant, then by deviation profile
// entries in ascending id order. Verdicts, counterexamples and examined
// counts are pure functions of the inputs (seed included) and do not depend
// on the worker count.

enum class Verdict { holds, violated, domain_error };
std::string to_string(Verdict verdict);

/// Which property a counterexample witnesses.
enum class WitnessKind { dominance, efficiency, conformance, policy_disagreement, nondeterminism };
std::string to_string(WitnessKind kind);

/// Win/lose classification of a dominance counterexample: whether the
/// participant wins under the focal profile and under the deviant profile.
/// The four labels partition all cases; reports also carry the compact
/// codes 1a (win-win), 1b (win-lose), 2a (lose-win), 2b (lose-lose).
enum class CaseLabel { win_win, win_lose, lose_win, lose_lose };
std::string to_string(CaseLabel label);
std::string case_code(CaseLabel label);

/// One concrete property violation, self-contained enough to replay.
/// For dominance witnesses: participant i deviates from focal_bids[i] to
/// deviant_bids[i] given the others' deviant entries, and payoff_deviant
/// exceeds payoff_focal strictly and exactly. For the other kinds the
/// profiles carry the offending input and `detail` says what went wrong;
/// the payoff fields are zero.
struct Counterexample {
  WitnessKind kind;
  ParticipantId participant;
  Profile valuations;
  Profile focal_bids;
  Profile deviant_bids;
  Rational payoff_focal;
  Rational payoff_deviant;
  std::optional<CaseLabel> label;
  std::string detail;
};

/// The bundled precondition for one weak-dominance check: a rule, who
/// values what, the focal strategy profile under test, the deviation grid
/// and the tie-break policy. Valuation and focal entries must lie on the
/// grid; focal and deviant profiles are evaluated under the same policy.
struct DominanceScenario {
  AuctionRule rule;
  Profile valuations;
  Profile focal_bids;
  BidGrid grid;
  TieBreakPolicy policy;
};

struct PropertyReport {
  std::string property;
  std::string rule_name;
  BidGrid grid;
  std::size_t participant_count;
  std::string policy_name;
  Verdict verdict;
  std::optional<Counterexample> counterexample;
  /// Candidates enumerated in canonical order up to and including the
  /// counterexample (the full space when the property holds). Skipped
  /// candidates, e.g. deviations equal to the focal bid, count as
  /// enumerated; the figure is reproducible run to run.
  std::uint64_t profiles_examined = 0;
  /// Explanation when verdict == domain_error.
  std::string error;
  /// Wall-clock time; deliberately absent from to_text().
  std::chrono::microseconds elapsed{0};

  std::string to_text() const;
};

/// Checks that no single participant can strictly gain by deviating from
/// their focal bid, whatever on-grid bids the others submit. Deviations
/// equal to the focal bid are skipped (they compare a profile to itself).
PropertyReport check_weak_dominance(const DominanceScenario& scenario, unsigned workers = 1);

/// Runs check_weak_dominance with focal bids = valuations for every
/// valuation profile on the grid: the truthful profile must be weakly
/// dominant everywhere for the verdict to hold.
PropertyReport check_truthful_equilibrium(const AuctionRule& rule, const BidGrid& grid,
                                          std::size_t participant_count,
                                          const TieBreakPolicy& policy, unsigned workers = 1);

/// Checks that under truthful bidding the rule always allocates the good
/// to a participant with the top valuation.
PropertyReport check_efficiency_truthful(const AuctionRule& rule, const BidGrid& grid,
                                         std::size_t participant_count,
                                         const TieBreakPolicy& policy, unsigned workers = 1);

/// Checks that the rule is a well-defined outcome function on the grid:
/// (a) every outcome satisfies the rule's conformance predicate under every
/// policy, (b) outcomes across policies differ at most in which tied top
/// bidder wins, and (c) repeated evaluation returns the identical outcome.
PropertyReport check_well_defined(const AuctionRule& rule, const BidGrid& grid,
                                  std::size_t participant_count,
                                  const std::vector<TieBreakPolicy>& policies,
                                  unsigned workers = 1);

/// The counterexample check_weak_dominance would embed, or nullopt when
/// the property holds. Throws std::invalid_argument on malformed scenarios
/// (where check_weak_dominance reports a domain error instead).
std::optional<Counterexample> find_counterexample(const DominanceScenario& scenario,
                                                  unsigned workers = 1);

}  // namespace auction
