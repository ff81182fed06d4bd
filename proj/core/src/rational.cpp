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

#include <algorithm>
#include <cctype>

#include "mklab/errors.hpp"

namespace mklab {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt digits_to_int(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) {
    value *= 10;
    value += c - '0';
  }
  return value;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw ParseError("not a rational number: '" + std::string(text) +
                   "' (expected forms: \"p/q\", integer, or decimal like \"18.8\")");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
    rest.remove_prefix(1);
  }
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
    rest.remove_suffix(1);
  }
  if (rest.empty()) bad_rational(text);

  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  Rational magnitude;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::string_view num = rest.substr(0, slash);
    std::string_view den = rest.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    BigInt q = digits_to_int(den);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    magnitude = Rational(digits_to_int(num), q);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_rational(text);
    if (!whole.empty() && !all_digits(whole)) bad_rational(text);
    if (!frac.empty() && !all_digits(frac)) bad_rational(text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt numerator = digits_to_int(whole.empty() ? "0" : whole) * scale +
                       (frac.empty() ? BigInt(0) : digits_to_int(frac));
    magnitude = Rational(numerator, scale);
  } else {
    if (!all_digits(rest)) bad_rational(text);
    magnitude = Rational(digits_to_int(rest));
  }
  return negative ? Rational(-magnitude) : magnitude;
}

std::string to_exact_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (value == 0) return "0";

  const bool negative = value < 0;
  BigInt p = boost::multiprecision::numerator(value);
  if (negative) p = -p;
  const BigInt q = boost::multiprecision::denominator(value);

  BigInt whole = p / q;
  BigInt rem = p % q;
  std::string whole_digits = whole.str();
  std::string frac_digits;

  int significant_seen = whole > 0 ? static_cast<int>(whole_digits.size()) : 0;
  bool leading_zeros = whole == 0;  // zeros before the first significant digit
  bool round_up = false;

  while (rem != 0) {
    if (!leading_zeros && significant_seen >= significant_digits) {
      // Peek one more digit to round half away from zero.
      round_up = rem * 2 >= q;
      break;
    }
    rem *= 10;
    BigInt digit = rem / q;
    rem %= q;
    frac_digits.push_back(static_cast<char>('0' + static_cast<int>(digit)));
    if (digit != 0) leading_zeros = false;
    if (!leading_zeros) ++significant_seen;
  }

  if (round_up) {
    int i = static_cast<int>(frac_digits.size()) - 1;
    for (; i >= 0; --i) {
      if (frac_digits[i] != '9') {
        ++frac_digits[i];
        break;
      }
      frac_digits[i] = '0';
    }
    if (i < 0) {
      whole += 1;
      whole_digits = whole.str();
    }
  }

  while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();

  std::string result = negative ? "-" : "";
  result += whole_digits;
  if (!frac_digits.empty()) {
    result += '.';
    result += frac_digits;
  }
  return result;
}

}  // namespace mklab
