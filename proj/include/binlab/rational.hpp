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

#ifndef BINLAB_RATIONAL_HPP_
#define BINLAB_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace binlab {

// Exact rational used for every quantity that is not an integer count:
// deltas, epsilons, segment components and packing ratios.
using Rational = boost::rational<std::int64_t>;

// Accepts "p/q" or a bare integer "p". Decimal notation is rejected so
// that values typed on the command line stay exact.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& r);

std::int64_t Floor(const Rational& r);
std::int64_t Ceil(const Rational& r);

inline double ToDouble(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace binlab

#endif  // BINLAB_RATIONAL_HPP_
