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

/// Finite set of admissible bid values, modeling the discrete quantum of
/// currency: nonempty, strictly ascending, all nonnegative.
class BidGrid {
 public:
  explicit BidGrid(std::vector<Rational> ascending_values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::size_t index) const { return values_.at(index); }

  std::optional<std::size_t> index_of(const Rational& value) const;
  bool contains(const Rational& value) const { return index_of(value).has_value(); }

  friend bool operator==(const BidGrid& a, const BidGrid& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rational> values_;
};

/// "0,1/2,1" in ascending order.
std::string format_grid(const BidGrid& grid);

/// The Cartesian product grid^n over a participant set, enumerated by rank
/// in id-major order: the entry of the smallest id is the most significant
/// digit, so rank order equals lexicographic profile order. Decoding is an
/// odometer; nothing recurses on grid size.
class ProfileSpace {
 public:
  ProfileSpace(BidGrid grid, ParticipantSet set);

  /// grid.size() ^ set.size(); throws std::overflow_error if it does not
  /// fit in 64 bits.
  std::uint64_t size() const { return size_; }

  const BidGrid& grid() const { return grid_; }
  const ParticipantSet& participants() const { return set_; }

  Profile at(std::uint64_t rank) const;

  /// Inverse of at(); throws std::invalid_argument when an entry is off the
  /// grid or the participant set differs.
  std::uint64_t rank_of(const Profile& profile) const;

 private:
  BidGrid grid_;
  ParticipantSet set_;
  std::uint64_t size_;
};

}  // namespace auction
