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

#ifndef JOBPULSE_RATIONAL_HPP_
#define JOBPULSE_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace jobpulse {

// Exact rational numbers. Demand weights are 1/k for arbitrary k, and sums of
// such weights over large corpora have denominators lcm(1..k) that outgrow
// any fixed-width integer, so the backend is arbitrary precision.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders |value| with |places| decimal digits, rounding half away from zero.
std::string FormatDecimal(const Rational &value, int places);

// Renders a fraction as a percentage, e.g. 433/4044 -> "10.7%".
std::string FormatPercent(const Rational &fraction, int places = 1);

// "num/den" in lowest terms; integers render without a denominator.
std::string FormatFraction(const Rational &value);

// Parses "3/4", "-2", "0.75" or "1e-2" free forms into an exact value.
// Decimal input is converted exactly ("0.1" is 1/10, not the double).
// Throws ValidationError on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational &value);

}  // namespace jobpulse

#endif  // JOBPULSE_RATIONAL_HPP_
