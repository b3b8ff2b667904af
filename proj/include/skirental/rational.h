/*
 * Copyright 2026 The skirental Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exact rational arithmetic for competitive ratios. Every optimality and
// equilibrium decision in the library goes through these values; doubles
// only show up when averaging Monte-Carlo samples and when printing.

#ifndef SKIRENTAL_RATIONAL_H_
#define SKIRENTAL_RATIONAL_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "boost/rational.hpp"

namespace skirental {

using Day = std::int64_t;
using Dollars = std::int64_t;

// Always in lowest terms with a positive denominator. Compare with == and !=
// only against another ExactRatio: under C++20 the mixed int overloads of
// boost 1.74 recurse forever.
using ExactRatio = boost::rational<std::int64_t>;

// cost / opt. Fails when opt <= 0.
absl::StatusOr<ExactRatio> Ratio(Dollars cost, Dollars opt);

std::int64_t Floor(const ExactRatio& x);
std::int64_t Ceil(const ExactRatio& x);

double ToDouble(const ExactRatio& x);

// "124/75", or "2" for integers.
std::string FormatFraction(const ExactRatio& x);

// Six fractional digits, e.g. "1.653333".
std::string FormatDecimal(const ExactRatio& x, int digits = 6);

// Accepts "3", "-2", "1/5", "0.2", "1.25". Decimal input is converted
// exactly (0.2 == 1/5), never through a double.
absl::StatusOr<ExactRatio> ParseRatio(absl::string_view text);

}  // namespace skirental

#endif  // SKIRENTAL_RATIONAL_H_
