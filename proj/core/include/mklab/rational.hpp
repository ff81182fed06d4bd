// Copyright 2026 The makespan-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mklab {

// All durations, timestamps and makespans are exact rationals. Several of
// the reference results are non-terminating decimals (107/3, 8/3, ...), so
// floating point would make golden values unreliable.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integer, and plain decimal forms: "8/3", "-35", "18.8".
// Throws ParseError on anything else (including zero denominators).
Rational parse_rational(std::string_view text);

// "p/q" for non-integers, a plain integer string otherwise. This is the
// authoritative on-disk form; decimals are display only.
std::string to_exact_string(const Rational& value);

// Non-scientific decimal rendering, rounded to `significant_digits`
// significant digits, trailing zeros stripped ("35.6666666666667", "18.8").
std::string to_decimal_string(const Rational& value, int significant_digits = 15);

}  // namespace mklab
