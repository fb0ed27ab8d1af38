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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace auction {

using ParticipantId = std::uint32_t;

/// Immutable finite set of participant ids with ascending, deterministic
/// iteration order. A second highest bid only exists with two or more
/// bidders, so construction rejects sets smaller than two; that keeps
/// maximum_except total for every member id.
///
/// Ids need not be contiguous. Copies share storage.
class ParticipantSet {
 public:
  /// Sorts the ids; throws std::invalid_argument on duplicates or size < 2.
  explicit ParticipantSet(std::vector<ParticipantId> ids);

  /// The set {0, 1, ..., n-1}.
  static ParticipantSet contiguous(std::size_t n);

  std::size_t size() const { return ids_->size(); }
  const std::vector<ParticipantId>& ids() const { return *ids_; }

  bool contains(ParticipantId id) const;

  /// Position of `id` in ascending order; throws std::out_of_range if absent.
  std::size_t index_of(ParticipantId id) const;

  friend bool operator==(const ParticipantSet& a, const ParticipantSet& b) {
    return a.ids_ == b.ids_ || *a.ids_ == *b.ids_;
  }

 private:
  std::shared_ptr<const std::vector<ParticipantId>> ids_;
};

}  // namespace auction
