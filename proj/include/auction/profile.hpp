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

#include <string>
#include <string_view>
#include <vector>

#include "auction/participants.hpp"
#include "auction/rational.hpp"

namespace auction {

/// Total map from a participant set to exact rationals. Serves as bid,
/// valuation and payment vector; bid/valuation roles additionally require
/// nonnegative entries, which the auction rules enforce at their boundary.
/// Immutable after construction.
class Profile {
 public:
  /// `values` aligned with `set.ids()` in ascending id order.
  Profile(ParticipantSet set, std::vector<Rational> values);

  static Profile constant(ParticipantSet set, const Rational& value);

  const ParticipantSet& participants() const { return set_; }
  std::size_t size() const { return values_.size(); }

  const Rational& at(ParticipantId id) const { return values_[set_.index_of(id)]; }
  const Rational& at_index(std::size_t index) const { return values_.at(index); }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.set_ == b.set_ && a.values_ == b.values_;
  }

 private:
  ParticipantSet set_;
  std::vector<Rational> values_;
};

/// Largest entry of the profile. Total: the participant set is never empty.
Rational maximum(const Profile& y);

/// Largest entry over all participants except `i`; total because sets have
/// at least two members. Throws std::out_of_range for unknown ids.
Rational maximum_except(const Profile& y, ParticipantId i);

/// All ids whose entry equals maximum(b), ascending. Never empty.
std::vector<ParticipantId> argmax_set(const Profile& b);

/// Copy of `y` with entry `i` replaced by `z`.
Profile deviation(const Profile& y, ParticipantId i, const Rational& z);

bool all_nonnegative(const Profile& p);

/// "0,1/2,2" in ascending id order.
std::string format_profile(const Profile& p);

}  // namespace auction
