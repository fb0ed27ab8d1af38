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

/// 0/1 winner flags over a participant set. Every rule in this toolbox
/// produces exactly one winner; the type itself permits degenerate flag
/// vectors so that conformance predicates can observe and reject them.
class Allocation {
 public:
  /// Flags aligned with set ids; each flag must be 0 or 1.
  Allocation(ParticipantSet set, std::vector<std::uint8_t> flags);

  static Allocation single_winner(ParticipantSet set, ParticipantId winner);

  const ParticipantSet& participants() const { return set_; }
  bool wins(ParticipantId id) const { return flags_[set_.index_of(id)] != 0; }
  std::uint8_t at_index(std::size_t index) const { return flags_.at(index); }
  const std::vector<std::uint8_t>& flags() const { return flags_; }

  std::size_t winner_count() const;
  /// The single winner, or nullopt when the flags are degenerate.
  std::optional<ParticipantId> unique_winner() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.set_ == b.set_ && a.flags_ == b.flags_;
  }

 private:
  ParticipantSet set_;
  std::vector<std::uint8_t> flags_;
};

/// Payment vector; rules in this toolbox only ever charge nonnegative
/// amounts.
using Payments = Profile;

/// Allocation plus payments over one shared participant set.
struct Outcome {
  Outcome(Allocation allocation_in, Payments payments_in);

  Allocation allocation;
  Payments payments;

  friend bool operator==(const Outcome& a, const Outcome& b) {
    return a.allocation == b.allocation && a.payments == b.payments;
  }
};

/// Two lines: "allocation: 0,1,0\npayments: 0,20,0\n" in ascending id order.
std::string format_outcome(const Outcome& outcome);

}  // namespace auction
