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
#include <string>
#include <vector>

#include "auction/profile.hpp"

namespace auction {

/// Deterministic selector of the single winner among the tied top bidders.
/// seeded_pseudorandom is a pure function of (seed, bids, tie set): it hashes
/// a canonical serialization of its inputs, so repeated evaluation and
/// re-runs with the same seed pick the same winner on every platform. No
/// ambient entropy anywhere.
class TieBreakPolicy {
 public:
  static TieBreakPolicy lowest_id();
  static TieBreakPolicy highest_id();
  static TieBreakPolicy seeded_pseudorandom(std::uint64_t seed);

  /// Builds a policy from its display name, e.g. "highest_id" or
  /// "seeded_pseudorandom(42)". Returns nullopt for unknown names.
  static std::optional<TieBreakPolicy> from_name(std::string_view name);

  /// Picks one id out of `tied` (nonempty, ascending, all present in bids).
  ParticipantId select(const std::vector<ParticipantId>& tied, const Profile& bids) const;

  /// "lowest_id", "highest_id" or "seeded_pseudorandom(<seed>)".
  std::string name() const;

  friend bool operator==(const TieBreakPolicy& a, const TieBreakPolicy& b) {
    return a.kind_ == b.kind_ && a.seed_ == b.seed_;
  }

 private:
  enum class Kind { lowest, highest, seeded };
  TieBreakPolicy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}

  Kind kind_;
  std::uint64_t seed_;
};

}  // namespace auction
