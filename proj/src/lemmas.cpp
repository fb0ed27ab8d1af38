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

#include "auction/lemmas.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace auction {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::passed:
      return "passed";
    case ClaimStatus::failed:
      return "failed";
    case ClaimStatus::inapplicable:
      return "inapplicable";
  }
  throw std::logic_error("unhandled claim status");
}

namespace {

// Everything a lemma needs about one triple (v, b̂, i): the
// truthful-deviation profile, both second-price outcomes, and the win
// flags they imply. Computed once and shared so that the public lemma
// functions and the suite cannot drift apart.
struct TripleView {
  Profile truthful;
  Outcome at_truthful;
  Outcome at_deviant;
  bool wins_truthful;
  bool wins_deviant;
};

TripleView view_of(const Profile& valuations, const Profile& deviant_bids, ParticipantId i,
                   const TieBreakPolicy& policy) {
  if (!(valuations.participants() == deviant_bids.participants())) {
    throw std::invalid_argument("valuations and bids must share one participant set");
  }
  Profile truthful = deviation(deviant_bids, i, valuations.at(i));
  Outcome at_truthful = second_price_outcome(truthful, policy);
  Outcome at_deviant = second_price_outcome(deviant_bids, policy);
  const bool wins_truthful = at_truthful.allocation.wins(i);
  const bool wins_deviant = at_deviant.allocation.wins(i);
  return TripleView{std::move(truthful), std::move(at_truthful), std::move(at_deviant),
                    wins_truthful, wins_deviant};
}

CaseLabel leaf_of(bool wins_truthful, bool wins_deviant) {
  if (wins_truthful) {
    return wins_deviant ? CaseLabel::win_win : CaseLabel::win_lose;
  }
  return wins_deviant ? CaseLabel::lose_win : CaseLabel::lose_lose;
}

Rational payoff_of(const Profile& valuations, const Outcome& outcome, ParticipantId i) {
  return payoff(valuations.at(i), outcome.allocation.wins(i), outcome.payments.at(i));
}

CheckedClaim truthful_winner_payoff_claim(const TripleView& view, const Profile& valuations,
                                          ParticipantId i) {
  if (!view.wins_truthful) {
    return CheckedClaim::skip();
  }
  const Rational expected = valuations.at(i) - maximum_except(view.truthful, i);
  const Rational actual = payoff_of(valuations, view.at_truthful, i);
  if (!(actual == expected)) {
    return CheckedClaim::fail("truthful winner payoff " + format_rational(actual) +
                              " differs from valuation minus highest other bid " +
                              format_rational(expected));
  }
  if (actual < 0) {
    return CheckedClaim::fail("truthful winner payoff " + format_rational(actual) +
                              " is negative");
  }
  return CheckedClaim::pass();
}

CheckedClaim deviation_winner_payoff_unchanged_claim(const TripleView& view,
                                                     const Profile& valuations, ParticipantId i) {
  if (!view.wins_truthful || !view.wins_deviant) {
    return CheckedClaim::skip();
  }
  const Rational at_truthful = payoff_of(valuations, view.at_truthful, i);
  const Rational at_deviant = payoff_of(valuations, view.at_deviant, i);
  if (!(at_truthful == at_deviant)) {
    return CheckedClaim::fail("deviant payoff " + format_rational(at_deviant) +
                              " differs from truthful payoff " + format_rational(at_truthful));
  }
  return CheckedClaim::pass();
}

CheckedClaim loser_payoff_zero_claim(const Outcome& outcome, const Profile& valuations,
                                     ParticipantId i) {
  if (outcome.allocation.wins(i)) {
    return CheckedClaim::skip();
  }
  if (!(outcome.payments.at(i) == 0)) {
    return CheckedClaim::fail("loser " + std::to_string(i) + " pays " +
                              format_rational(outcome.payments.at(i)));
  }
  const Rational actual = payoff_of(valuations, outcome, i);
  if (!(actual == 0)) {
    return CheckedClaim::fail("loser payoff " + format_rational(actual) + " is not zero");
  }
  return CheckedClaim::pass();
}

CheckedClaim loser_bound_claim(const TripleView& view, const Profile& valuations,
                               const Profile& deviant_bids, ParticipantId i) {
  if (view.wins_truthful || !view.wins_deviant) {
    return CheckedClaim::skip();
  }
  const Rational& valuation = valuations.at(i);
  const Rational truthful_price = maximum_except(view.truthful, i);
  if (valuation > truthful_price) {
    return CheckedClaim::fail("losing valuation " + format_rational(valuation) +
                              " exceeds the highest other bid " +
                              format_rational(truthful_price));
  }
  const Rational expected = valuation - maximum_except(deviant_bids, i);
  const Rational actual = payoff_of(valuations, view.at_deviant, i);
  if (!(actual == expected)) {
    return CheckedClaim::fail("deviant payoff " + format_rational(actual) +
                              " differs from valuation minus highest other bid " +
                              format_rational(expected));
  }
  if (actual > 0) {
    return CheckedClaim::fail("deviant payoff " + format_rational(actual) + " is positive");
  }
  return CheckedClaim::pass();
}

}  // namespace

LemmaCase classify_case(const Profile& valuations, const Profile& deviant_bids, ParticipantId i,
                        const TieBreakPolicy& policy) {
  TripleView view = view_of(valuations, deviant_bids, i, policy);
  return LemmaCase{leaf_of(view.wins_truthful, view.wins_deviant),
                   view.wins_truthful,
                   view.wins_deviant,
                   i,
                   std::move(view.truthful),
                   deviant_bids};
}

CheckedClaim lemma_truthful_winner_payoff(const Profile& valuations, const Profile& deviant_bids,
                                          ParticipantId i, const TieBreakPolicy& policy) {
  return truthful_winner_payoff_claim(view_of(valuations, deviant_bids, i, policy), valuations,
                                      i);
}

CheckedClaim lemma_deviation_winner_payoff_unchanged(const Profile& valuations,
                                                     const Profile& deviant_bids, ParticipantId i,
                                                     const TieBreakPolicy& policy) {
  return deviation_winner_payoff_unchanged_claim(view_of(valuations, deviant_bids, i, policy),
                                                 valuations, i);
}

CheckedClaim lemma_loser_payoff_zero(const Profile& valuations, const Profile& bids,
                                     ParticipantId i, const TieBreakPolicy& policy) {
  if (!(valuations.participants() == bids.participants())) {
    throw std::invalid_argument("valuations and bids must share one participant set");
  }
  return loser_payoff_zero_claim(second_price_outcome(bids, policy), valuations, i);
}

CheckedClaim lemma_loser_bound(const Profile& valuations, const Profile& deviant_bids,
                               ParticipantId i, const TieBreakPolicy& policy) {
  return loser_bound_claim(view_of(valuations, deviant_bids, i, policy), valuations,
                           deviant_bids, i);
}

std::uint64_t LemmaSuiteReport::failures() const {
  std::uint64_t sum = 0;
  for (const LemmaTally& tally : lemmas) {
    sum += tally.failed;
  }
  return sum;
}

bool LemmaSuiteReport::vacuous() const {
  for (const LemmaTally& tally : lemmas) {
    if (tally.applicable == 0) {
      return true;
    }
  }
  return false;
}

std::string LemmaSuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite: proof_cases\n";
  out << "rule: second_price\n";
  out << "grid: " << format_grid(grid) << "\n";
  out << "n: " << participant_count << "\n";
  out << "policy: " << policy_name << "\n";
  out << "triples: " << triples << "\n";
  static const char* const kCaseNames[4] = {"case_1a", "case_1b", "case_2a", "case_2b"};
  for (std::size_t k = 0; k < case_counts.size(); ++k) {
    out << kCaseNames[k] << ": " << case_counts[k] << "\n";
  }
  for (const LemmaTally& tally : lemmas) {
    out << "lemma " << tally.lemma << ": applicable=" << tally.applicable
        << " passed=" << tally.passed << " failed=" << tally.failed
        << " skipped=" << tally.skipped << "\n";
  }
  out << "failures: " << failures() << "\n";
  if (!first_failure.empty()) {
    out << "first_failure: " << first_failure << "\n";
  }
  return out.str();
}

LemmaSuiteReport run_lemma_suite(const BidGrid& grid, std::size_t participant_count,
                                 const TieBreakPolicy& policy) {
  const ParticipantSet set = ParticipantSet::contiguous(participant_count);
  const ProfileSpace space(grid, set);

  LemmaSuiteReport report{grid, participant_count, policy.name()};
  report.lemmas = {LemmaTally{"truthful_winner_payoff"},
                   LemmaTally{"deviation_winner_payoff_unchanged"},
                   LemmaTally{"loser_payoff_zero"}, LemmaTally{"loser_bound"}};

  const auto tally = [&report](std::size_t lemma_index, const CheckedClaim& claim,
                               const Profile& valuations, const Profile& deviant_bids,
                               ParticipantId i) {
    LemmaTally& row = report.lemmas[lemma_index];
    switch (claim.status) {
      case ClaimStatus::passed:
        ++row.applicable;
        ++row.passed;
        break;
      case ClaimStatus::failed:
        ++row.applicable;
        ++row.failed;
        if (report.first_failure.empty()) {
          report.first_failure = row.lemma + " at v=" + format_profile(valuations) +
                                 " deviation=" + format_profile(deviant_bids) + " i=" +
                                 std::to_string(i) + ": " + claim.detail;
        }
        break;
      case ClaimStatus::inapplicable:
        ++row.skipped;
        break;
    }
  };

  for (std::uint64_t v_rank = 0; v_rank < space.size(); ++v_rank) {
    const Profile valuations = space.at(v_rank);
    for (std::uint64_t b_rank = 0; b_rank < space.size(); ++b_rank) {
      const Profile deviant_bids = space.at(b_rank);
      for (const ParticipantId i : set.ids()) {
        const TripleView view = view_of(valuations, deviant_bids, i, policy);
        ++report.triples;
        ++report.case_counts[static_cast<std::size_t>(
            leaf_of(view.wins_truthful, view.wins_deviant))];
        tally(0, truthful_winner_payoff_claim(view, valuations, i), valuations, deviant_bids, i);
        tally(1, deviation_winner_payoff_unchanged_claim(view, valuations, i), valuations,
              deviant_bids, i);
        tally(2, loser_payoff_zero_claim(view.at_deviant, valuations, i), valuations,
              deviant_bids, i);
        tally(3, loser_bound_claim(view, valuations, deviant_bids, i), valuations, deviant_bids,
              i);
      }
    }
  }
  return report;
}

}  // namespace auction
