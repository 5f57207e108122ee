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

#ifndef BINLAB_INSTANCE_HPP_
#define BINLAB_INSTANCE_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binlab/rational.hpp"

namespace binlab {

// A size expressed as num/grid of the unit bin capacity, 0 <= num <= grid.
struct GridSize {
  std::int64_t num = 0;
  std::int64_t grid = 1;

  Rational value() const { return Rational(num, grid); }

  friend bool operator==(const GridSize&, const GridSize&) = default;
};

// Assignment value for an item that occupies no bin (size-zero items).
inline constexpr std::int64_t kNoBin = -1;

// Items on a shared grid plus a bin inventory. Bin b < bin_count() has the
// capacity listed in the instance; indices past the inventory are fresh unit
// bins, so regular solvers never run out of bins.
class Instance {
 public:
  // Throws Error(kInvalidArgument) when an invariant is violated. An empty
  // item list is accepted only with allow_empty set. An empty capacity list
  // means every bin has unit capacity.
  Instance(std::int64_t grid, std::vector<std::int64_t> sizes,
           std::int64_t bin_count, std::vector<std::int64_t> capacities = {},
           bool allow_empty = false);

  // Regular instance with bin_count = max(1, n).
  static Instance Regular(std::int64_t grid, std::vector<std::int64_t> sizes,
                          bool allow_empty = false);

  std::int64_t grid() const { return grid_; }
  std::size_t size() const { return sizes_.size(); }
  bool empty() const { return sizes_.empty(); }
  GridSize item(std::size_t i) const { return {sizes_[i], grid_}; }
  std::span<const std::int64_t> sizes() const { return sizes_; }

  std::int64_t bin_count() const { return bin_count_; }
  // Capacity numerator of bin b; grid() for b >= bin_count().
  std::int64_t capacity(std::int64_t b) const;
  std::span<const std::int64_t> capacities() const { return capacities_; }
  bool is_regular() const { return regular_; }
  bool allow_empty() const { return allow_empty_; }

  // Sum of item numerators.
  std::int64_t total() const;

 private:
  std::int64_t grid_;
  std::vector<std::int64_t> sizes_;
  std::int64_t bin_count_;
  std::vector<std::int64_t> capacities_;
  bool regular_ = true;
  bool allow_empty_ = false;
};

struct Packing {
  std::vector<std::int64_t> assignment;  // item index -> bin index or kNoBin
  std::int64_t bins_opened = 0;
};

// Number of unit-capacity bins that receive at least one item.
std::int64_t CountOpened(const Instance& inst,
                         std::span<const std::int64_t> assignment);

// Builds a Packing with bins_opened filled in from the assignment.
Packing MakePacking(const Instance& inst, std::vector<std::int64_t> assignment);

// Distinct sizes ascending with multiplicities.
struct SizeProfile {
  std::int64_t grid = 1;
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> counts;

  std::size_t k() const { return sizes.size(); }
  std::int64_t n() const;
  GridSize size(std::size_t i) const { return {sizes[i], grid}; }
  // Index of a size numerator, or -1.
  std::int64_t IndexOf(std::int64_t size_num) const;
  // Re-expands to the item multiset, ascending.
  std::vector<std::int64_t> Expand() const;
  // Copy without the size-zero class, if any.
  SizeProfile WithoutZero() const;
};

SizeProfile Profile(const Instance& inst);

enum class Violation {
  kNone,
  kLengthMismatch,     // assignment length differs from item count
  kUnassigned,         // positive-size item has no bin
  kBadBinIndex,        // negative index other than kNoBin
  kCapacityOverflow,
  kOpenedMismatch,     // bins_opened disagrees with the assignment
};

struct ValidityReport {
  Violation violation = Violation::kNone;
  std::int64_t item = -1;
  std::int64_t bin = -1;
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
};

ValidityReport ValidatePacking(const Instance& inst, const Packing& p);

// Instance file: {"grid", "items": [{"size_num", "count"}...], "bins",
// "capacities_num"?, "allow_empty"?}. Item runs expand in file order.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& inst);

// Packing file: {"assignment": [...], "bins_opened": n}.
Packing ParsePacking(std::string_view text);
std::string SerializePacking(const Packing& p);

}  // namespace binlab

#endif  // BINLAB_INSTANCE_HPP_
