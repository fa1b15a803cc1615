// Copyright 2026 The pathcolor Authors
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

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathcolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the combinatorial convention: zero whenever
// k < 0, n < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// base^exp for exp >= 0. Negative exponents are a caller bug and throw.
BigInt ipow(std::int64_t base, std::int64_t exp);

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& r, int digits = 6);

double to_double(const Rational& r);

}  // namespace pathcolor
