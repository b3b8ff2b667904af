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

#include "skirental/rational.h"

#include <cstdlib>
#include <limits>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace skirental {

absl::StatusOr<ExactRatio> Ratio(Dollars cost, Dollars opt) {
  if (opt <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("ratio needs a positive optimum, got opt=", opt));
  }
  return ExactRatio(cost, opt);
}

std::int64_t Floor(const ExactRatio& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

std::int64_t Ceil(const ExactRatio& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() > 0) ++q;
  return q;
}

double ToDouble(const ExactRatio& x) {
  return static_cast<double>(x.numerator()) /
         static_cast<double>(x.denominator());
}

std::string FormatFraction(const ExactRatio& x) {
  if (x.denominator() == 1) return absl::StrCat(x.numerator());
  return absl::StrCat(x.numerator(), "/", x.denominator());
}

std::string FormatDecimal(const ExactRatio& x, int digits) {
  // Round half away from zero at the requested digit, in integers.
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = x < 0;
  const ExactRatio magnitude = negative ? -x : x;
  const ExactRatio scaled = magnitude * scale + ExactRatio(1, 2);
  const std::int64_t units = Floor(scaled);
  std::string frac = absl::StrCat(units % scale);
  while (static_cast<int>(frac.size()) < digits) frac.insert(0, "0");
  std::string out = absl::StrCat(negative ? "-" : "", units / scale);
  if (digits > 0) absl::StrAppend(&out, ".", frac);
  return out;
}

absl::StatusOr<ExactRatio> ParseRatio(absl::string_view text) {
  const absl::string_view s = absl::StripAsciiWhitespace(text);
  auto bad = [&] {
    return absl::InvalidArgumentError(
        absl::StrCat("not a rational number: '", text, "'"));
  };
  if (s.empty()) return bad();
  if (s.find('/') != absl::string_view::npos) {
    std::vector<absl::string_view> parts = absl::StrSplit(s, '/');
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (parts.size() != 2 || !absl::SimpleAtoi(parts[0], &num) ||
        !absl::SimpleAtoi(parts[1], &den) || den == 0) {
      return bad();
    }
    return ExactRatio(num, den);
  }
  const size_t dot = s.find('.');
  if (dot == absl::string_view::npos) {
    std::int64_t v = 0;
    if (!absl::SimpleAtoi(s, &v)) return bad();
    return ExactRatio(v);
  }
  absl::string_view whole = s.substr(0, dot);
  absl::string_view frac = s.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
    negative = whole[0] == '-';
    whole.remove_prefix(1);
  }
  if ((whole.empty() && frac.empty()) || frac.size() > 15) return bad();
  std::int64_t w = 0;
  if (!whole.empty() && !absl::SimpleAtoi(whole, &w)) return bad();
  std::int64_t f = 0;
  std::int64_t scale = 1;
  for (char c : frac) {
    if (!absl::ascii_isdigit(static_cast<unsigned char>(c))) return bad();
    f = f * 10 + (c - '0');
    scale *= 10;
  }
  if (w > (std::numeric_limits<std::int64_t>::max() - f) / scale) return bad();
  ExactRatio v(w * scale + f, scale);
  return negative ? -v : v;
}

}  // namespace skirental
