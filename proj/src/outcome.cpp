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

#include "auction/outcome.hpp"

#include <stdexcept>

namespace auction {

Allocation::Allocation(ParticipantSet set, std::vector<std::uint8_t> flags)
    : set_(std::move(set)), flags_(std::move(flags)) {
  if (flags_.size() != set_.size()) {
    throw std::invalid_argument("allocation must flag every participant");
  }
  for (auto f : flags_) {
    if (f > 1) throw std::invalid_argument("allocation flags must be 0 or 1");
  }
}

Allocation Allocation::single_winner(ParticipantSet set, ParticipantId winner) {
  std::vector<std::uint8_t> flags(set.size(), 0);
  flags[set.index_of(winner)] = 1;
  return Allocation(std::move(set), std::move(flags));
}

std::size_t Allocation::winner_count() const {
  std::size_t count = 0;
  for (auto f : flags_) count += f;
  return count;
}

std::optional<ParticipantId> Allocation::unique_winner() const {
  std::optional<ParticipantId> winner;
  for (std::size_t k = 0; k < flags_.size(); ++k) {
    if (flags_[k] != 0) {
      if (winner.has_value()) return std::nullopt;
      winner = set_.ids()[k];
    }
  }
  return winner;
}

Outcome::Outcome(Allocation allocation_in, Payments payments_in)
    : allocation(std::move(allocation_in)), payments(std::move(payments_in)) {
  if (!(allocation.participants() == payments.participants())) {
    throw std::invalid_argument("allocation and payments must share one participant set");
  }
}

std::string format_outcome(const Outcome& outcome) {
  std::string out = "allocation: ";
  for (std::size_t k = 0; k < outcome.allocation.participants().size(); ++k) {
    if (k > 0) out += ',';
    out += outcome.allocation.at_index(k) ? '1' : '0';
  }
  out += "\npayments: ";
  out += format_profile(outcome.payments);
  out += '\n';
  return out;
}

}  // namespace auction
