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

#include "mklab/rational.hpp"

#include <doctest.h>

#include "mklab/errors.hpp"

using namespace mklab;

TEST_CASE("parse_rational accepts p/q, integer, and decimal forms") {
  CHECK(parse_rational("8/3") == Rational(8, 3));
  CHECK(parse_rational("35") == Rational(35));
  CHECK(parse_rational("18.8") == Rational(94, 5));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational(" 107/3 ") == Rational(107, 3));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("4.") == 4);
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));  // canonicalized
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("--4"), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
}

TEST_CASE("exact rendering") {
  CHECK(to_exact_string(Rational(107, 3)) == "107/3");
  CHECK(to_exact_string(Rational(47)) == "47");
  CHECK(to_exact_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_exact_string(Rational(0)) == "0");
}

TEST_CASE("decimal rendering uses 15 significant digits and strips zeros") {
  CHECK(to_decimal_string(Rational(107, 3)) == "35.6666666666667");
  CHECK(to_decimal_string(Rational(94, 5)) == "18.8");
  CHECK(to_decimal_string(Rational(47)) == "47");
  CHECK(to_decimal_string(Rational(0)) == "0");
  CHECK(to_decimal_string(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal_string(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal_string(Rational(-94, 5)) == "-18.8");
  CHECK(to_decimal_string(Rational(999, 1000), 2) == "1");    // carry ripples up
  CHECK(to_decimal_string(Rational(1, 8), 2) == "0.13");      // rounds half away
  CHECK(to_decimal_string(Rational(81, 94), 6) == "0.861702");
}

TEST_CASE("parse/render round-trip") {
  for (const Rational& value :
       {Rational(107, 3), Rational(-94, 5), Rational(0), Rational(12345, 7)}) {
    CHECK(parse_rational(to_exact_string(value)) == value);
  }
}
