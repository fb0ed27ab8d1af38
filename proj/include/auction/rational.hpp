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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace auction {

/// Exact rational quantity of currency. Arithmetic never rounds; values are
/// kept in canonical form (reduced, positive denominator), so equality is
/// value equality (1/2 == 2/4). Floating point is banned from the core: tie
/// detection and the case splits of the checkers hinge on exact equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "-p", "p/q" or "-p/q" with decimal digits and nonzero q.
/// Leading/trailing whitespace is accepted; anything else (decimals,
/// exponents, inner spaces, zero denominators) is rejected.
/// Throws std::invalid_argument naming the offending text.
Rational parse_rational(std::string_view text);

/// Canonical text form: "2", "-2", "3/2", "-3/2".
std::string format_rational(const Rational& value);

}  // namespace auction
