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

#ifndef BINLAB_CONFIG_COVER_HPP_
#define BINLAB_CONFIG_COVER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binlab/instance.hpp"
#include "binlab/rational.hpp"

namespace binlab {

// Contents of one bin by size class. `mass` and `length` are grid numerators.
struct BinConfig {
  std::vector<std::int64_t> counts;
  std::vector<std::int64_t> mass;
  std::int64_t length = 0;

  static BinConfig FromCounts(std::vector<std::int64_t> counts,
                              std::span<const std::int64_t> sizes);
};

// All bin configurations consistent with a profile whose length lies in
// [1 - delta, 1]. `sizes` is the ascending size list the counts refer to.
struct ConfigSet {
  Rational delta;
  std::int64_t grid = 1;
  std::vector<std::int64_t> sizes;
  std::vector<BinConfig> configs;

  bool empty() const { return configs.empty(); }
  std::size_t size() const { return configs.size(); }
};

// A target vector in units of bin capacity, one component per size class.
struct SegmentVector {
  std::vector<Rational> target;

  Rational length() const;
  std::size_t k() const { return target.size(); }
};

struct CoverEntry {
  std::vector<std::int64_t> counts;
  std::int64_t multiplicity = 0;

  friend bool operator==(const CoverEntry&, const CoverEntry&) = default;
};

// Multiset of bin configurations, entries sorted by counts and merged.
class Cover {
 public:
  Cover() = default;
  explicit Cover(std::size_t k) : k_(k) {}

  void Add(const std::vector<std::int64_t>& counts, std::int64_t times = 1);

  std::size_t k() const { return k_; }
  std::int64_t size() const;
  const std::vector<CoverEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  // Per-class item capacity: sum over entries of counts * multiplicity.
  std::vector<std::int64_t> Slots() const;

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<CoverEntry> entries_;
};

// Depth-first enumeration in ascending size order. Throws
// Error(kConfigExplosion) once more than `cap` configurations are found and
// Error(kInvalidArgument) unless delta lies in (0, 1/2].
ConfigSet EnumerateConfigs(const SizeProfile& prof, const Rational& delta,
                           std::size_t cap);

// Whole items of class i a target component requires: ceil(t_i / s_i).
std::vector<std::int64_t> DemandCounts(const SegmentVector& target,
                                       std::span<const std::int64_t> sizes,
                                       std::int64_t grid);

struct CoverResult {
  Cover cover;
  bool optimal = false;         // false only when the node budget ran out
  std::int64_t lower_bound = 0; // root bound
  std::int64_t nodes = 0;
};

// Exact minimum-cardinality cover of `target` by members of `configs`:
//   minimize sum x_j  s.t.  sum_j mass_ij x_j >= t_i,  x_j integer >= 0.
// Branch-and-bound over multiplicities, configurations ordered by length
// descending. Throws Error(kUncoverable) when a positive component has no
// covering configuration. When node_budget runs out the best incumbent is
// returned with optimal == false.
CoverResult MinCover(const SegmentVector& target, const ConfigSet& configs,
                     std::int64_t node_budget);

// Component-wise dominance check in exact arithmetic.
bool CoverFeasible(const Cover& cover, const SegmentVector& target,
                   std::span<const std::int64_t> sizes, std::int64_t grid);

// Multiplicity-wise sum. Throws Error(kDimensionMismatch) if k differs.
Cover CoverUnion(const Cover& a, const Cover& b);
// `times`-fold self union.
Cover CoverRepeat(const Cover& a, std::int64_t times);

// [{"counts": [...], "multiplicity": n}, ...]
std::string SerializeCover(const Cover& cover);
Cover ParseCover(std::string_view text);

}  // namespace binlab

#endif  // BINLAB_CONFIG_COVER_HPP_
