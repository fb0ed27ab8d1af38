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

#include "auction/grid.hpp"

#include <limits>
#include <stdexcept>

namespace auction {

BidGrid::BidGrid(std::vector<Rational> ascending_values) : values_(std::move(ascending_values)) {
  if (values_.empty()) throw std::invalid_argument("grid must be nonempty");
  if (values_.front() < 0) throw std::invalid_argument("grid values must be nonnegative");
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (!(values_[k - 1] < values_[k])) {
      throw std::invalid_argument("grid values must be distinct ascending");
    }
  }
}

std::optional<std::size_t> BidGrid::index_of(const Rational& value) const {
  // Grids are small; a scan keeps Rational comparisons obvious.
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] == value) return k;
  }
  return std::nullopt;
}

std::string format_grid(const BidGrid& grid) {
  std::string out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k > 0) out += ',';
    out += format_rational(grid.at(k));
  }
  return out;
}

ProfileSpace::ProfileSpace(BidGrid grid, ParticipantSet set)
    : grid_(std::move(grid)), set_(std::move(set)) {
  size_ = 1;
  const auto g = static_cast<std::uint64_t>(grid_.size());
  for (std::size_t k = 0; k < set_.size(); ++k) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / g) {
      throw std::overflow_error("profile space size exceeds 64 bits");
    }
    size_ *= g;
  }
}

Profile ProfileSpace::at(std::uint64_t rank) const {
  if (rank >= size_) throw std::out_of_range("profile rank out of range");
  const std::uint64_t g = grid_.size();
  std::vector<Rational> values(set_.size());
  for (std::size_t k = set_.size(); k-- > 0;) {
    values[k] = grid_.at(static_cast<std::size_t>(rank % g));
    rank /= g;
  }
  return Profile(set_, std::move(values));
}

std::uint64_t ProfileSpace::rank_of(const Profile& profile) const {
  if (!(profile.participants() == set_)) {
    throw std::invalid_argument("profile is over a different participant set");
  }
  std::uint64_t rank = 0;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const auto digit = grid_.index_of(profile.at_index(k));
    if (!digit.has_value()) {
      throw std::invalid_argument("profile entry " + format_rational(profile.at_index(k)) +
                                  " is not on the grid");
    }
    rank = rank * grid_.size() + *digit;
  }
  return rank;
}

}  // namespace auction
