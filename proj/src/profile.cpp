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

#include "auction/profile.hpp"

#include <stdexcept>

namespace auction {

Profile::Profile(ParticipantSet set, std::vector<Rational> values)
    : set_(std::move(set)), values_(std::move(values)) {
  if (values_.size() != set_.size()) {
    throw std::invalid_argument("profile must assign a value to every participant");
  }
}

Profile Profile::constant(ParticipantSet set, const Rational& value) {
  std::vector<Rational> values(set.size(), value);
  return Profile(std::move(set), std::move(values));
}

Rational maximum(const Profile& y) {
  const auto& v = y.values();
  Rational best = v[0];
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] > best) best = v[k];
  }
  return best;
}

Rational maximum_except(const Profile& y, ParticipantId i) {
  const std::size_t skip = y.participants().index_of(i);
  const auto& v = y.values();
  const Rational* best = nullptr;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k == skip) continue;
    if (best == nullptr || v[k] > *best) best = &v[k];
  }
  // Nonempty by the n >= 2 invariant.
  return *best;
}

std::vector<ParticipantId> argmax_set(const Profile& b) {
  const Rational top = maximum(b);
  std::vector<ParticipantId> ids;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b.at_index(k) == top) ids.push_back(b.participants().ids()[k]);
  }
  return ids;
}

Profile deviation(const Profile& y, ParticipantId i, const Rational& z) {
  const std::size_t index = y.participants().index_of(i);
  std::vector<Rational> values = y.values();
  values[index] = z;
  return Profile(y.participants(), std::move(values));
}

bool all_nonnegative(const Profile& p) {
  for (const auto& v : p.values()) {
    if (v < 0) return false;
  }
  return true;
}

std::string format_profile(const Profile& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += ',';
    out += format_rational(p.at_index(k));
  }
  return out;
}

}  // namespace auction
