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

#include "auction/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace auction {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::domain_error:
      return "domain-error";
  }
  throw std::logic_error("unhandled verdict");
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::dominance:
      return "dominance";
    case WitnessKind::efficiency:
      return "efficiency";
    case WitnessKind::conformance:
      return "conformance";
    case WitnessKind::policy_disagreement:
      return "policy_disagreement";
    case WitnessKind::nondeterminism:
      return "nondeterminism";
  }
  throw std::logic_error("unhandled witness kind");
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::win_win:
      return "win-win";
    case CaseLabel::win_lose:
      return "win-lose";
    case CaseLabel::lose_win:
      return "lose-win";
    case CaseLabel::lose_lose:
      return "lose-lose";
  }
  throw std::logic_error("unhandled case label");
}

std::string case_code(CaseLabel label) {
  switch (label) {
    case CaseLabel::win_win:
      return "1a";
    case CaseLabel::win_lose:
      return "1b";
    case CaseLabel::lose_win:
      return "2a";
    case CaseLabel::lose_lose:
      return "2b";
  }
  throw std::logic_error("unhandled case label");
}

namespace {

bool mul_overflows(std::uint64_t a, std::uint64_t b) {
  return b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (mul_overflows(a, b)) {
    throw std::overflow_error("search space exceeds 64-bit indexing");
  }
  return a * b;
}

// Finds the smallest index in [0, total) whose probe reports a violation.
// Workers claim contiguous chunks from a shared cursor and publish the best
// index seen so far; a chunk or index at or beyond the published bound can
// only lose to an already recorded violation, so skipping it never changes
// the answer. Every index below the final minimum gets probed, which makes
// the result a pure function of the probe, independent of scheduling and
// worker count. The probe must be const-callable and thread-safe.
template <typename Probe>
std::optional<std::pair<std::uint64_t, Counterexample>> scan_for_minimum(std::uint64_t total,
                                                                         unsigned workers,
                                                                         const Probe& probe) {
  if (workers <= 1 || total < 4096) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (std::optional<Counterexample> hit = probe(idx)) {
        return std::make_pair(idx, std::move(*hit));
      }
    }
    return std::nullopt;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(256, total / (std::uint64_t{workers} * 64));
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<std::uint64_t> bound{total};
  std::mutex sink_mutex;
  std::optional<std::pair<std::uint64_t, Counterexample>> found;
  std::exception_ptr trouble;

  auto drain = [&] {
    try {
      while (true) {
        const std::uint64_t begin = cursor.fetch_add(chunk, std::memory_order_relaxed);
        if (begin >= total) {
          break;
        }
        if (begin >= bound.load(std::memory_order_acquire)) {
          continue;
        }
        const std::uint64_t end = std::min(total, begin + chunk);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          if (idx >= bound.load(std::memory_order_relaxed)) {
            break;
          }
          std::optional<Counterexample> hit = probe(idx);
          if (!hit) {
            continue;
          }
          std::uint64_t seen = bound.load(std::memory_order_relaxed);
          while (idx < seen &&
                 !bound.compare_exchange_weak(seen, idx, std::memory_order_acq_rel)) {
          }
          std::lock_guard<std::mutex> lock(sink_mutex);
          if (!found || idx < found->first) {
            found.emplace(idx, std::move(*hit));
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(sink_mutex);
      if (!trouble) {
        trouble = std::current_exception();
      }
      bound.store(0, std::memory_order_release);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(drain);
  }
  for (std::thread& t : pool) {
    t.join();
  }

  if (trouble) {
    std::rethrow_exception(trouble);
  }
  return found;
}

PropertyReport blank_report(std::string property, std::string rule_name, BidGrid grid,
                            std::size_t participant_count, std::string policy_name) {
  return PropertyReport{std::move(property),
                        std::move(rule_name),
                        std::move(grid),
                        participant_count,
                        std::move(policy_name),
                        Verdict::holds,
                        std::nullopt};
}

std::chrono::microseconds since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               start);
}

std::optional<std::string> scenario_problem(const DominanceScenario& s) {
  if (!s.rule.run || !s.rule.conforms) {
    return "rule is missing its outcome function or conformance predicate";
  }
  if (!(s.valuations.participants() == s.focal_bids.participants())) {
    return "valuations and focal bids must share one participant set";
  }
  const ParticipantSet& set = s.valuations.participants();
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (!s.grid.contains(s.valuations.at_index(k))) {
      return "valuation " + format_rational(s.valuations.at_index(k)) + " of participant " +
             std::to_string(set.ids()[k]) + " is not on the grid";
    }
    if (!s.grid.contains(s.focal_bids.at_index(k))) {
      return "focal bid " + format_rational(s.focal_bids.at_index(k)) + " of participant " +
             std::to_string(set.ids()[k]) + " is not on the grid";
    }
  }
  return std::nullopt;
}

Counterexample dominance_witness(const AuctionRule& rule, const TieBreakPolicy& policy,
                                 const Profile& valuations, const Profile& focal_bids,
                                 ParticipantId i, const Profile& focal_profile,
                                 const Profile& deviant_profile, Rational payoff_focal,
                                 Rational payoff_deviant) {
  const Outcome at_focal = rule.run(focal_profile, policy);
  const Outcome at_deviant = rule.run(deviant_profile, policy);
  const bool wins_focal = at_focal.allocation.wins(i);
  const bool wins_deviant = at_deviant.allocation.wins(i);
  const CaseLabel label = wins_focal
                              ? (wins_deviant ? CaseLabel::win_win : CaseLabel::win_lose)
                              : (wins_deviant ? CaseLabel::lose_win : CaseLabel::lose_lose);
  return Counterexample{WitnessKind::dominance,
                        i,
                        valuations,
                        focal_bids,
                        deviant_profile,
                        std::move(payoff_focal),
                        std::move(payoff_deviant),
                        label,
                        ""};
}

std::string join_policy_names(const std::vector<TieBreakPolicy>& policies) {
  std::string joined;
  for (const TieBreakPolicy& policy : policies) {
    if (!joined.empty()) {
      joined += ",";
    }
    joined += policy.name();
  }
  return joined;
}

// Outcomes of two policies may differ only in which tied top bidder wins:
// both must name exactly one winner from argmax_set(bids), and every
// participant that loses in both outcomes must keep identical flags and
// payments. Returns a description of the first discrepancy.
std::optional<std::string> tie_equivalence_problem(const Profile& bids, const Outcome& base,
                                                   const std::string& base_policy,
                                                   const Outcome& other,
                                                   const std::string& other_policy) {
  const std::optional<ParticipantId> base_winner = base.allocation.unique_winner();
  const std::optional<ParticipantId> other_winner = other.allocation.unique_winner();
  if (!base_winner) {
    return "outcome under policy " + base_policy + " does not name exactly one winner";
  }
  if (!other_winner) {
    return "outcome under policy " + other_policy + " does not name exactly one winner";
  }
  const std::vector<ParticipantId> top = argmax_set(bids);
  if (!std::binary_search(top.begin(), top.end(), *base_winner)) {
    return "winner under policy " + base_policy + " is not a tied top bidder";
  }
  if (!std::binary_search(top.begin(), top.end(), *other_winner)) {
    return "winner under policy " + other_policy + " is not a tied top bidder";
  }
  const ParticipantSet& set = bids.participants();
  for (std::size_t k = 0; k < set.size(); ++k) {
    const ParticipantId id = set.ids()[k];
    if (id == *base_winner || id == *other_winner) {
      continue;
    }
    if (base.allocation.at_index(k) != other.allocation.at_index(k) ||
        !(base.payments.at_index(k) == other.payments.at_index(k))) {
      return "policies " + base_policy + " and " + other_policy +
             " disagree on losing participant " + std::to_string(id);
    }
  }
  if (*base_winner == *other_winner &&
      !(base.payments.at(*base_winner) == other.payments.at(*other_winner))) {
    return "policies " + base_policy + " and " + other_policy + " charge winner " +
           std::to_string(*base_winner) + " differently";
  }
  return std::nullopt;
}

}  // namespace

PropertyReport check_weak_dominance(const DominanceScenario& scenario, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report =
      blank_report("weak_dominance", scenario.rule.name, scenario.grid,
                   scenario.valuations.participants().size(), scenario.policy.name());
  if (std::optional<std::string> problem = scenario_problem(scenario)) {
    report.verdict = Verdict::domain_error;
    report.error = std::move(*problem);
    report.elapsed = since(start);
    return report;
  }
  try {
    const ParticipantSet& set = scenario.valuations.participants();
    const ProfileSpace space(scenario.grid, set);
    const std::uint64_t per_participant = space.size();
    const std::uint64_t total = checked_mul(per_participant, set.size());

    const auto probe = [&](std::uint64_t idx) -> std::optional<Counterexample> {
      const std::size_t i_index = static_cast<std::size_t>(idx / per_participant);
      const Profile deviant = space.at(idx % per_participant);
      const Rational& focal_bid = scenario.focal_bids.at_index(i_index);
      if (deviant.at_index(i_index) == focal_bid) {
        return std::nullopt;
      }
      const ParticipantId i = set.ids()[i_index];
      const Profile focal = deviation(deviant, i, focal_bid);
      Rational payoff_focal = payoff_at(scenario.rule, scenario.valuations, focal,
                                        scenario.policy, i);
      Rational payoff_deviant = payoff_at(scenario.rule, scenario.valuations, deviant,
                                          scenario.policy, i);
      if (!(payoff_deviant > payoff_focal)) {
        return std::nullopt;
      }
      return dominance_witness(scenario.rule, scenario.policy, scenario.valuations,
                               scenario.focal_bids, i, focal, deviant, std::move(payoff_focal),
                               std::move(payoff_deviant));
    };

    if (const auto hit = scan_for_minimum(total, workers, probe)) {
      report.verdict = Verdict::violated;
      report.counterexample = hit->second;
      report.profiles_examined = hit->first + 1;
    } else {
      report.verdict = Verdict::holds;
      report.profiles_examined = total;
    }
  } catch (const std::exception& e) {
    report.verdict = Verdict::domain_error;
    report.error = e.what();
  }
  report.elapsed = since(start);
  return report;
}

PropertyReport check_truthful_equilibrium(const AuctionRule& rule, const BidGrid& grid,
                                          std::size_t participant_count,
                                          const TieBreakPolicy& policy, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report =
      blank_report("truthful_equilibrium", rule.name, grid, participant_count, policy.name());
  try {
    if (!rule.run || !rule.conforms) {
      throw std::invalid_argument("rule is missing its outcome function or conformance predicate");
    }
    const ParticipantSet set = ParticipantSet::contiguous(participant_count);
    const ProfileSpace space(grid, set);
    const std::uint64_t profiles = space.size();
    const std::uint64_t per_valuation = checked_mul(profiles, set.size());
    const std::uint64_t total = checked_mul(profiles, per_valuation);

    const auto probe = [&](std::uint64_t idx) -> std::optional<Counterexample> {
      const Profile valuations = space.at(idx / per_valuation);
      const std::uint64_t rest = idx % per_valuation;
      const std::size_t i_index = static_cast<std::size_t>(rest / profiles);
      const Profile deviant = space.at(rest % profiles);
      const Rational& truthful_bid = valuations.at_index(i_index);
      if (deviant.at_index(i_index) == truthful_bid) {
        return std::nullopt;
      }
      const ParticipantId i = set.ids()[i_index];
      const Profile focal = deviation(deviant, i, truthful_bid);
      Rational payoff_focal = payoff_at(rule, valuations, focal, policy, i);
      Rational payoff_deviant = payoff_at(rule, valuations, deviant, policy, i);
      if (!(payoff_deviant > payoff_focal)) {
        return std::nullopt;
      }
      return dominance_witness(rule, policy, valuations, valuations, i, focal, deviant,
                               std::move(payoff_focal), std::move(payoff_deviant));
    };

    if (const auto hit = scan_for_minimum(total, workers, probe)) {
      report.verdict = Verdict::violated;
      report.counterexample = hit->second;
      report.profiles_examined = hit->first + 1;
    } else {
      report.verdict = Verdict::holds;
      report.profiles_examined = total;
    }
  } catch (const std::exception& e) {
    report.verdict = Verdict::domain_error;
    report.error = e.what();
  }
  report.elapsed = since(start);
  return report;
}

PropertyReport check_efficiency_truthful(const AuctionRule& rule, const BidGrid& grid,
                                         std::size_t participant_count,
                                         const TieBreakPolicy& policy, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report =
      blank_report("efficiency_truthful", rule.name, grid, participant_count, policy.name());
  try {
    if (!rule.run || !rule.conforms) {
      throw std::invalid_argument("rule is missing its outcome function or conformance predicate");
    }
    const ParticipantSet set = ParticipantSet::contiguous(participant_count);
    const ProfileSpace space(grid, set);
    const std::uint64_t total = space.size();

    const auto probe = [&](std::uint64_t rank) -> std::optional<Counterexample> {
      const Profile valuations = space.at(rank);
      const Outcome outcome = rule.run(valuations, policy);
      if (is_efficient(valuations, outcome.allocation)) {
        return std::nullopt;
      }
      ParticipantId anchor = set.ids().front();
      std::string detail = "allocation does not name exactly one winner";
      if (const std::optional<ParticipantId> winner = outcome.allocation.unique_winner()) {
        anchor = *winner;
        detail = "winner " + std::to_string(*winner) + " does not hold a top valuation";
      }
      return Counterexample{WitnessKind::efficiency, anchor,       valuations,
                            valuations,              valuations,   Rational(0),
                            Rational(0),             std::nullopt, std::move(detail)};
    };

    if (const auto hit = scan_for_minimum(total, workers, probe)) {
      report.verdict = Verdict::violated;
      report.counterexample = hit->second;
      report.profiles_examined = hit->first + 1;
    } else {
      report.verdict = Verdict::holds;
      report.profiles_examined = total;
    }
  } catch (const std::exception& e) {
    report.verdict = Verdict::domain_error;
    report.error = e.what();
  }
  report.elapsed = since(start);
  return report;
}

PropertyReport check_well_defined(const AuctionRule& rule, const BidGrid& grid,
                                  std::size_t participant_count,
                                  const std::vector<TieBreakPolicy>& policies, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report = blank_report("well_defined", rule.name, grid, participant_count,
                                       join_policy_names(policies));
  try {
    if (!rule.run || !rule.conforms) {
      throw std::invalid_argument("rule is missing its outcome function or conformance predicate");
    }
    if (policies.empty()) {
      throw std::invalid_argument("at least one tie-break policy is required");
    }
    const ParticipantSet set = ParticipantSet::contiguous(participant_count);
    const ProfileSpace space(grid, set);
    const std::uint64_t total = space.size();

    const auto witness = [&set](WitnessKind kind, const Profile& bids, ParticipantId anchor,
                                std::string detail) {
      return Counterexample{kind,        anchor,      bids,         bids, bids,
                            Rational(0), Rational(0), std::nullopt, std::move(detail)};
    };

    const auto probe = [&](std::uint64_t rank) -> std::optional<Counterexample> {
      const Profile bids = space.at(rank);
      std::vector<Outcome> outcomes;
      outcomes.reserve(policies.size());
      for (const TieBreakPolicy& policy : policies) {
        std::optional<Outcome> once;
        try {
          once.emplace(rule.run(bids, policy));
        } catch (const std::exception& e) {
          return witness(WitnessKind::conformance, bids, set.ids().front(),
                         "rule failed under policy " + policy.name() + ": " + e.what());
        }
        if (!rule.conforms(bids, *once)) {
          const ParticipantId anchor =
              once->allocation.unique_winner().value_or(set.ids().front());
          return witness(WitnessKind::conformance, bids, anchor,
                         "outcome rejected by the conformance predicate under policy " +
                             policy.name());
        }
        std::optional<Outcome> again;
        try {
          again.emplace(rule.run(bids, policy));
        } catch (const std::exception& e) {
          return witness(WitnessKind::nondeterminism, bids, set.ids().front(),
                         "repeated evaluation under policy " + policy.name() +
                             " failed: " + e.what());
        }
        if (!(*again == *once)) {
          const ParticipantId anchor =
              once->allocation.unique_winner().value_or(set.ids().front());
          return witness(WitnessKind::nondeterminism, bids, anchor,
                         "repeated evaluation under policy " + policy.name() +
                             " returned a different outcome");
        }
        outcomes.push_back(std::move(*once));
      }
      for (std::size_t k = 1; k < outcomes.size(); ++k) {
        if (std::optional<std::string> problem =
                tie_equivalence_problem(bids, outcomes.front(), policies.front().name(),
                                        outcomes[k], policies[k].name())) {
          const ParticipantId anchor =
              outcomes.front().allocation.unique_winner().value_or(set.ids().front());
          return witness(WitnessKind::policy_disagreement, bids, anchor, std::move(*problem));
        }
      }
      return std::nullopt;
    };

    if (const auto hit = scan_for_minimum(total, workers, probe)) {
      report.verdict = Verdict::violated;
      report.counterexample = hit->second;
      report.profiles_examined = hit->first + 1;
    } else {
      report.verdict = Verdict::holds;
      report.profiles_examined = total;
    }
  } catch (const std::exception& e) {
    report.verdict = Verdict::domain_error;
    report.error = e.what();
  }
  report.elapsed = since(start);
  return report;
}

std::optional<Counterexample> find_counterexample(const DominanceScenario& scenario,
                                                  unsigned workers) {
  if (std::optional<std::string> problem = scenario_problem(scenario)) {
    throw std::invalid_argument(*problem);
  }
  PropertyReport report = check_weak_dominance(scenario, workers);
  if (report.verdict == Verdict::domain_error) {
    throw std::invalid_argument(report.error);
  }
  return std::move(report.counterexample);
}

std::string PropertyReport::to_text() const {
  std::ostringstream out;
  out << "property: " << property << "\n";
  out << "rule: " << rule_name << "\n";
  out << "verdict: " << to_string(verdict) << "\n";
  out << "grid: " << format_grid(grid) << "\n";
  out << "n: " << participant_count << "\n";
  out << "policy: " << policy_name << "\n";
  if (verdict == Verdict::domain_error) {
    out << "error: " << error << "\n";
    return out.str();
  }
  out << "profiles_examined: " << profiles_examined << "\n";
  if (!counterexample) {
    return out.str();
  }
  const Counterexample& cex = *counterexample;
  out << "counterexample:\n";
  out << "  kind: " << to_string(cex.kind) << "\n";
  if (cex.label) {
    out << "  case: " << case_code(*cex.label) << " (" << to_string(*cex.label) << ")\n";
  }
  out << "  participant: " << cex.participant << "\n";
  switch (cex.kind) {
    case WitnessKind::dominance:
      out << "  valuations: " << format_profile(cex.valuations) << "\n";
      out << "  focal_bids: " << format_profile(cex.focal_bids) << "\n";
      out << "  deviant_bids: " << format_profile(cex.deviant_bids) << "\n";
      out << "  payoff_focal: " << format_rational(cex.payoff_focal) << "\n";
      out << "  payoff_deviant: " << format_rational(cex.payoff_deviant) << "\n";
      break;
    case WitnessKind::efficiency:
      out << "  valuations: " << format_profile(cex.valuations) << "\n";
      break;
    case WitnessKind::conformance:
    case WitnessKind::policy_disagreement:
    case WitnessKind::nondeterminism:
      out << "  bids: " << format_profile(cex.focal_bids) << "\n";
      break;
  }
  if (!cex.detail.empty()) {
    out << "  detail: " << cex.detail << "\n";
  }
  return out.str();
}

}  // namespace auction
