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

#include "auction/tie_break.hpp"

#include <charconv>
#include <stdexcept>

namespace auction {

namespace {

// FNV-1a, fixed 64-bit variant; platform-independent by construction.
struct Fnv1a {
  std::uint64_t state = 1469598103934665603ull;

  void feed(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < size; ++k) {
      state ^= bytes[k];
      state *= 1099511628211ull;
    }
  }

  void feed_u64(std::uint64_t v) {
    unsigned char bytes[8];
    for (int k = 0; k < 8; ++k) bytes[k] = static_cast<unsigned char>(v >> (8 * k));
    feed(bytes, 8);
  }

  void feed_string(const std::string& s) { feed(s.data(), s.size()); }
};

}  // namespace

TieBreakPolicy TieBreakPolicy::lowest_id() { return TieBreakPolicy(Kind::lowest, 0); }
TieBreakPolicy TieBreakPolicy::highest_id() { return TieBreakPolicy(Kind::highest, 0); }
TieBreakPolicy TieBreakPolicy::seeded_pseudorandom(std::uint64_t seed) {
  return TieBreakPolicy(Kind::seeded, seed);
}

std::optional<TieBreakPolicy> TieBreakPolicy::from_name(std::string_view name) {
  if (name == "lowest_id") return lowest_id();
  if (name == "highest_id") return highest_id();
  constexpr std::string_view prefix = "seeded_pseudorandom(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), seed);
    if (ec == std::errc() && ptr == digits.end() && !digits.empty()) {
      return seeded_pseudorandom(seed);
    }
  }
  return std::nullopt;
}

ParticipantId TieBreakPolicy::select(const std::vector<ParticipantId>& tied,
                                     const Profile& bids) const {
  if (tied.empty()) throw std::invalid_argument("tie-break set must be nonempty");
  switch (kind_) {
    case Kind::lowest:
      return tied.front();
    case Kind::highest:
      return tied.back();
    case Kind::seeded: {
      Fnv1a hash;
      hash.feed_u64(seed_);
      hash.feed_u64(bids.size());
      for (std::size_t k = 0; k < bids.size(); ++k) {
        hash.feed_u64(bids.participants().ids()[k]);
        hash.feed_string(format_rational(bids.at_index(k)));
      }
      return tied[static_cast<std::size_t>(hash.state % tied.size())];
    }
  }
  throw std::logic_error("unreachable tie-break kind");
}

std::string TieBreakPolicy::name() const {
  switch (kind_) {
    case Kind::lowest:
      return "lowest_id";
    case Kind::highest:
      return "highest_id";
    case Kind::seeded:
      return "seeded_pseudorandom(" + std::to_string(seed_) + ")";
  }
  throw std::logic_error("unreachable tie-break kind");
}

}  // namespace auction
