// Copyright 2026 The JobPulse Authors.
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

#include "jobpulse/rational.hpp"

#include <cctype>
#include <string>

#include "jobpulse/error.hpp"

namespace jobpulse {

std::string FormatDecimal(const Rational &value, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  const BigInt magnitude = negative ? BigInt(-num) : num;
  // floor(|x| * scale + 1/2), computed exactly.
  const BigInt scaled = (magnitude * scale * 2 + den) / (den * 2);

  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

std::string FormatPercent(const Rational &fraction, int places) {
  return FormatDecimal(fraction * 100, places) + "%";
}

std::string FormatFraction(const Rational &value) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

namespace {

BigInt ParseDigits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ValidationError("malformed number '" + std::string(whole) + "'");
  BigInt out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("malformed number '" + std::string(whole) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

Rational ParseDecimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 6) {
      throw ValidationError("malformed number '" + std::string(whole) + "'");
    }
    exponent = static_cast<long>(ParseDigits(exp_text, whole));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw ValidationError("malformed number '" + std::string(whole) + "'");
  }
  BigInt mantissa = int_part.empty() ? BigInt(0) : ParseDigits(int_part, whole);
  if (!frac_part.empty()) {
    mantissa = mantissa * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size())) +
               ParseDigits(frac_part, whole);
  }
  exponent -= static_cast<long>(frac_part.size());
  Rational out(mantissa);
  const BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    out /= Rational(power);
  } else {
    out *= Rational(power);
  }
  return negative ? Rational(-out) : out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  text = Trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = ParseDecimal(Trim(text.substr(0, slash)), whole);
    const Rational den = ParseDecimal(Trim(text.substr(slash + 1)), whole);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(whole) + "'");
    return num / den;
  }
  return ParseDecimal(text, whole);
}

double ToDouble(const Rational &value) { return value.convert_to<double>(); }

}  // namespace jobpulse
