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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "auction/verifier.hpp"

namespace auction {

// The second-price dominance argument split into its four payoff lemmas,
// each checked claim by claim with exact arithmetic over a bid grid. A
// triple (v, b̂, i) compares the truthful-deviation profile b̂ with entry i
// replaced by v_i against the raw profile b̂; whether i "wins" is always
// decided by running the rule under the given policy, never by comparing
// bids, so ties carry no ambiguity. When every applicable claim passes on
// a grid, truthful bidding is weakly dominant on that grid.

enum class ClaimStatus { passed, failed, inapplicable };
std::string to_string(ClaimStatus status);

/// Outcome of one lemma instance. Claims whose precondition does not hold
/// are inapplicable, which reports as a skip and never as a pass.
struct CheckedClaim {
  ClaimStatus status;
  std::string detail;

  static CheckedClaim pass() { return {ClaimStatus::passed, ""}; }
  static CheckedClaim fail(std::string detail) { return {ClaimStatus::failed, std::move(detail)}; }
  static CheckedClaim skip() { return {ClaimStatus::inapplicable, ""}; }
};

/// Classification of one (v, b̂, i) triple by whether i wins the
/// second-price auction at the truthful-deviation profile and at the raw
/// profile. The four leaves partition all triples. Win flags always match
/// the allocation of the stored profiles under the given policy.
struct LemmaCase {
  CaseLabel leaf;
  bool wins_truthful;
  bool wins_deviant;
  ParticipantId participant;
  Profile truthful;
  Profile deviant;
};

LemmaCase classify_case(const Profile& valuations, const Profile& deviant_bids, ParticipantId i,
                        const TieBreakPolicy& policy);

/// If i wins at the truthful-deviation profile t = b̂ with entry i set to
/// v_i, their payoff there equals v_i minus the highest other bid in t and
/// is nonnegative. Inapplicable when i loses at t.
CheckedClaim lemma_truthful_winner_payoff(const Profile& valuations, const Profile& deviant_bids,
                                          ParticipantId i, const TieBreakPolicy& policy);

/// If i wins both at the truthful-deviation profile and at b̂, both payoffs
/// are exactly equal: only i's own entry differs between the two profiles,
/// so the price, the highest other bid, is the same. Inapplicable unless i
/// wins both.
CheckedClaim lemma_deviation_winner_payoff_unchanged(const Profile& valuations,
                                                     const Profile& deviant_bids, ParticipantId i,
                                                     const TieBreakPolicy& policy);

/// If i loses at `bids`, they are allocated nothing, pay nothing, and their
/// payoff is exactly zero. Inapplicable when i wins.
CheckedClaim lemma_loser_payoff_zero(const Profile& valuations, const Profile& bids,
                                     ParticipantId i, const TieBreakPolicy& policy);

/// If i loses at the truthful-deviation profile but wins at b̂, then v_i is
/// at most the highest other bid and the payoff at b̂ equals v_i minus that
/// bid, hence is nonpositive. Inapplicable otherwise.
CheckedClaim lemma_loser_bound(const Profile& valuations, const Profile& deviant_bids,
                               ParticipantId i, const TieBreakPolicy& policy);

struct LemmaTally {
  std::string lemma;
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct LemmaSuiteReport {
  BidGrid grid;
  std::size_t participant_count;
  std::string policy_name;
  std::uint64_t triples = 0;
  /// Indexed by CaseLabel: win-win, win-lose, lose-win, lose-lose.
  std::array<std::uint64_t, 4> case_counts{};
  std::vector<LemmaTally> lemmas;
  /// Description of the first failing claim in enumeration order; empty
  /// when everything passed.
  std::string first_failure;

  std::uint64_t failures() const;
  bool all_passed() const { return failures() == 0; }
  /// True when some lemma was never applicable on this grid, a sign the
  /// run proved nothing about that lemma.
  bool vacuous() const;

  std::string to_text() const;
};

/// Evaluates all four lemmas over every triple (v, b̂, i) in
/// grid^n x grid^n x participants under the given policy. Triples are
/// enumerated in id-major rank order (v outermost, then b̂, then i), so the
/// first failure is deterministic.
LemmaSuiteReport run_lemma_suite(const BidGrid& grid, std::size_t participant_count,
                                 const TieBreakPolicy& policy);

}  // namespace auction
