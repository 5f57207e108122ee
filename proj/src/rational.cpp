// Copyright 2026 The binlab Authors
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

#include "binlab/rational.hpp"

#include <charconv>

#include "binlab/error.hpp"

namespace binlab {
namespace {

std::int64_t ParseInt(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::kParse,
                "expected \"p/q\" or an integer, got \"" + std::string(whole) +
                    "\"");
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text, text));
  const std::int64_t num = ParseInt(text.substr(0, slash), text);
  const std::int64_t den = ParseInt(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t Floor(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // always positive
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

std::int64_t Ceil(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();
  std::int64_t q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kConfigExplosion: return "ConfigExplosion";
    case ErrorKind::kUncoverable: return "Uncoverable";
    case ErrorKind::kInfeasibleCover: return "InfeasibleCover";
    case ErrorKind::kNoFeasiblePlan: return "NoFeasiblePlan";
    case ErrorKind::kStuck: return "Stuck";
    case ErrorKind::kStateBudgetExhausted: return "StateBudgetExhausted";
    case ErrorKind::kItemBelowEpsilon: return "ItemBelowEpsilon";
  }
  return "Error";
}

}  // namespace binlab
