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

#include "auction/scenario.hpp"

#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

namespace auction {

namespace {

std::string describe(std::size_t line, const std::string& field, const std::string& message) {
  std::ostringstream out;
  if (line > 0) {
    out << "line " << line;
  }
  if (!field.empty()) {
    out << (line > 0 ? ", " : "") << field;
  }
  if (line > 0 || !field.empty()) {
    out << ": ";
  }
  out << message;
  return out.str();
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> pieces;
  while (true) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
      pieces.push_back(trim(text));
      return pieces;
    }
    pieces.push_back(trim(text.substr(0, comma)));
    text.remove_prefix(comma + 1);
  }
}

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const char* const begin = text.data();
  const char* const end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    return std::nullopt;
  }
  return value;
}

std::string quote(std::string_view text) {
  return "\"" + std::string(text) + "\"";
}

}  // namespace

ScenarioError::ScenarioError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error(describe(line, field, message)), line_(line), field_(std::move(field)) {}

AuctionRule ScenarioFile::rule() const {
  std::optional<AuctionRule> rule = rule_by_name(rule_name);
  if (!rule) {
    throw std::invalid_argument("unknown auction rule " + quote(rule_name));
  }
  return std::move(*rule);
}

TieBreakPolicy ScenarioFile::tie_break(std::uint64_t fallback_seed) const {
  if (tie_break_kind == "lowest_id") {
    return TieBreakPolicy::lowest_id();
  }
  if (tie_break_kind == "highest_id") {
    return TieBreakPolicy::highest_id();
  }
  if (tie_break_kind == "seeded_pseudorandom") {
    return TieBreakPolicy::seeded_pseudorandom(seed.value_or(fallback_seed));
  }
  throw std::invalid_argument("unknown tie-break policy " + quote(tie_break_kind));
}

ScenarioFile parse_scenario(std::string_view text) {
  std::optional<std::string> rule_name;
  std::optional<std::size_t> participants;
  std::optional<BidGrid> grid;
  std::optional<std::string> tie_break_kind;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<Rational>> raw_valuations;
  std::optional<std::vector<Rational>> raw_bids;
  std::size_t valuations_line = 0;
  std::size_t bids_line = 0;

  const auto parse_values = [](std::size_t line, const std::string& field,
                               std::string_view value) {
    std::vector<Rational> values;
    for (const std::string_view piece : split_commas(value)) {
      try {
        values.push_back(parse_rational(piece));
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(line, field, e.what());
      }
    }
    return values;
  };

  std::size_t line_number = 0;
  std::string_view rest = text;
  while (!rest.empty() || line_number == 0) {
    ++line_number;
    const std::size_t newline = rest.find('\n');
    std::string_view line = rest.substr(0, newline);
    rest = newline == std::string_view::npos ? std::string_view{} : rest.substr(newline + 1);

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    const std::size_t equals = line.find('=');
    if (equals == std::string_view::npos) {
      throw ScenarioError(line_number, "", "expected key = value, got " + quote(line));
    }
    const std::string key{trim(line.substr(0, equals))};
    const std::string_view value = trim(line.substr(equals + 1));

    if (key == "auction") {
      if (rule_name) {
        throw ScenarioError(line_number, key, "duplicate key");
      }
      if (!rule_by_name(value)) {
        throw ScenarioError(line_number, key, "unknown auction rule " + quote(value));
      }
      rule_name = std::string(value);
    } else if (key == "participants") {
      if (participants) {
        throw ScenarioError(line_number, key, "duplicate key");
      }
      const std::optional<std::uint64_t> count = parse_u64(value);
      if (!count) {
        throw ScenarioError(line_number, key, "malformed participant count " + quote(value));
      }
      if (*count < 2) {
        throw ScenarioError(line_number, key,
                            "participants must be >= 2, got " + std::to_string(*count));
      }
      participants = static_cast<std::size_t>(*count);
    } else if (key == "grid") {
      if (grid) {
        throw ScenarioError(line_number, key, "duplicate key");
      }
      try {
        grid.emplace(parse_values(line_number, key, value));
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(line_number, key, e.what());
      }
    } else if (key == "tie_break") {
      if (tie_break_kind) {
        throw ScenarioError(line_number, key, "duplicate key");
      }
      if (value == "lowest_id" || value == "highest_id" || value == "seeded_pseudorandom") {
        tie_break_kind = std::string(value);
      } else if (value.rfind("seeded_pseudorandom", 0) == 0) {
        std::string_view seed_text =
            trim(value.substr(std::string_view("seeded_pseudorandom").size()));
        if (seed_text.size() >= 2 && seed_text.front() == '(' && seed_text.back() == ')') {
          seed_text = trim(seed_text.substr(1, seed_text.size() - 2));
        }
        const std::optional<std::uint64_t> parsed = parse_u64(seed_text);
        if (!parsed) {
          throw ScenarioError(line_number, key, "malformed seed " + quote(seed_text));
        }
        tie_break_kind = "seeded_pseudorandom";
        seed = parsed;
      } else {
        throw ScenarioError(line_number, key, "unknown tie-break policy " + quote(value));
      }
    } else if (key == "valuations") {
      if (raw_valuations) {
        throw ScenarioError(line_number, key, "duplicate key");
      }
      raw_valuations = parse_values(line_number, key, value);
      valuations_line = line_number;
    } else if (key == "bids") {
      if (raw_bids) {
        throw ScenarioError(line_number, key, "duplicate key");
      }
      raw_bids = parse_values(line_number, key, value);
      bids_line = line_number;
    } else {
      throw ScenarioError(line_number, key, "unknown key");
    }
  }

  if (!rule_name) {
    throw ScenarioError(0, "auction", "scenario is missing required key");
  }
  if (!participants) {
    throw ScenarioError(0, "participants", "scenario is missing required key");
  }
  if (!grid) {
    throw ScenarioError(0, "grid", "scenario is missing required key");
  }

  const ParticipantSet set = ParticipantSet::contiguous(*participants);
  const auto check_profile = [&](std::size_t line, const std::string& field,
                                 std::vector<Rational> values) {
    if (values.size() != set.size()) {
      throw ScenarioError(line, field,
                          "expected " + std::to_string(set.size()) + " entries, got " +
                              std::to_string(values.size()));
    }
    for (const Rational& value : values) {
      if (!grid->contains(value)) {
        throw ScenarioError(line, field,
                            "entry " + format_rational(value) + " is not on the grid");
      }
    }
    return Profile(set, std::move(values));
  };

  std::optional<Profile> valuations;
  std::optional<Profile> bids;
  if (raw_valuations) {
    valuations = check_profile(valuations_line, "valuations", std::move(*raw_valuations));
  }
  if (raw_bids) {
    bids = check_profile(bids_line, "bids", std::move(*raw_bids));
  }
  return ScenarioFile{std::move(*rule_name),
                      *participants,
                      std::move(*grid),
                      tie_break_kind.value_or("lowest_id"),
                      seed,
                      std::move(valuations),
                      std::move(bids)};
}

std::string serialize_scenario(const ScenarioFile& scenario) {
  std::ostringstream out;
  out << "auction = " << scenario.rule_name << "\n";
  out << "participants = " << scenario.participants << "\n";
  out << "tie_break = " << scenario.tie_break_kind;
  if (scenario.tie_break_kind == "seeded_pseudorandom" && scenario.seed) {
    out << "(" << *scenario.seed << ")";
  }
  out << "\n";
  const auto write_values = [&out](const char* key, const std::vector<Rational>& values) {
    out << key << " = ";
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << (k == 0 ? "" : ", ") << format_rational(values[k]);
    }
    out << "\n";
  };
  write_values("grid", scenario.grid.values());
  if (scenario.valuations) {
    write_values("valuations", scenario.valuations->values());
  }
  if (scenario.bids) {
    write_values("bids", scenario.bids->values());
  }
  return out.str();
}

}  // namespace auction
