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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "auction/grid.hpp"
#include "auction/rules.hpp"

namespace auction {

// Line-oriented "key = value" scenario files with "#" comments. Keys:
//
//   auction       = second_price | first_price          (required)
//   participants  = n, at least 2                       (required)
//   grid          = comma-separated rationals, ascending (required)
//   tie_break     = lowest_id | highest_id | seeded_pseudorandom[(seed)]
//                   (optional, defaults to lowest_id)
//   valuations    = comma-separated rationals, length n  (optional)
//   bids          = comma-separated rationals, length n  (optional)
//
// Profile entries must lie on the grid. Participants are the contiguous
// ids 0..n-1. A seeded policy may omit its seed in the file, in which case
// the caller supplies one (the --seed flag); no randomness ever comes from
// anywhere but that explicit seed.

/// First error found in a scenario, addressed by 1-based line and key.
/// Line 0 marks errors that are not tied to a line, e.g. a missing key.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, std::string field, const std::string& message);

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

struct ScenarioFile {
  std::string rule_name;
  std::size_t participants;
  BidGrid grid;
  /// "lowest_id", "highest_id" or "seeded_pseudorandom".
  std::string tie_break_kind;
  /// Seed given in the file; may be absent for a seeded policy.
  std::optional<std::uint64_t> seed;
  std::optional<Profile> valuations;
  std::optional<Profile> bids;

  AuctionRule rule() const;
  /// The scenario's policy; `fallback_seed` fills in when the file names
  /// the seeded policy without a seed.
  TieBreakPolicy tie_break(std::uint64_t fallback_seed) const;

  friend bool operator==(const ScenarioFile& a, const ScenarioFile& b) {
    return a.rule_name == b.rule_name && a.participants == b.participants && a.grid == b.grid &&
           a.tie_break_kind == b.tie_break_kind && a.seed == b.seed &&
           a.valuations == b.valuations && a.bids == b.bids;
  }
};

/// Parses and validates scenario text; throws ScenarioError at the first
/// problem. parse(serialize(parse(text))) returns the identical scenario.
ScenarioFile parse_scenario(std::string_view text);

/// Canonical text form of a scenario, one key per line in fixed order.
std::string serialize_scenario(const ScenarioFile& scenario);

}  // namespace auction
