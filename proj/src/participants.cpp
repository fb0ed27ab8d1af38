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

#include "auction/participants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace auction {

ParticipantSet::ParticipantSet(std::vector<ParticipantId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw std::invalid_argument("participant ids must be distinct");
  }
  if (ids.size() < 2) {
    throw std::invalid_argument("participants must be >= 2, got " + std::to_string(ids.size()));
  }
  ids_ = std::make_shared<const std::vector<ParticipantId>>(std::move(ids));
}

ParticipantSet ParticipantSet::contiguous(std::size_t n) {
  std::vector<ParticipantId> ids(n);
  std::iota(ids.begin(), ids.end(), ParticipantId{0});
  return ParticipantSet(std::move(ids));
}

bool ParticipantSet::contains(ParticipantId id) const {
  return std::binary_search(ids_->begin(), ids_->end(), id);
}

std::size_t ParticipantSet::index_of(ParticipantId id) const {
  auto it = std::lower_bound(ids_->begin(), ids_->end(), id);
  if (it == ids_->end() || *it != id) {
    throw std::out_of_range("unknown participant id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - ids_->begin());
}

}  // namespace auction
