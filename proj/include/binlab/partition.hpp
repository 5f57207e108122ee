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

#ifndef BINLAB_PARTITION_HPP_
#define BINLAB_PARTITION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "binlab/config_cover.hpp"
#include "binlab/instance.hpp"
#include "binlab/rational.hpp"

namespace binlab {

// Total mass per distinct size, (n_i * s_i), as grid numerators.
struct DistributionVector {
  std::int64_t grid = 1;
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> mass;

  std::size_t k() const { return mass.size(); }
  Rational component(std::size_t i) const { return Rational(mass[i], grid); }
  std::int64_t length_num() const;
  Rational length() const { return Rational(length_num(), grid); }
};

// Segment with every component floored to a whole number of items.
struct TruncatedSegment {
  std::vector<std::int64_t> counts;
  std::vector<Rational> mass;

  SegmentVector AsSegment() const { return SegmentVector{mass}; }
};

// One (c, delta) cell of the parameter sweep; cover_size is empty when no
// delta-cover exists.
struct SweepCell {
  std::int64_t c = 0;
  Rational delta;
  std::optional<std::int64_t> cover_size;
  bool optimal = true;
};

struct PartitionPlan {
  std::int64_t c_star = 0;
  Rational delta_star;
  Rational ratio;            // |segment_cover| / c_star
  SegmentVector segment;     // the c_star-length segment
  std::int64_t copies = 0;   // floor(length / c_star)
  SegmentVector residual;    // distribution vector minus copies * segment
  Cover segment_cover;
  Cover residual_cover;
  bool residual_covered = true;  // false: no delta on the grid covers it
  Rational residual_delta;
  std::vector<SweepCell> table;
};

struct PartitionOptions {
  std::size_t config_cap = 200000;
  std::int64_t node_budget = 2000000;
};

struct PartitionResult {
  std::optional<PartitionPlan> plan;
  Cover cover;
  Packing packing;
  bool fallback = false;           // whole instance packed by FFD
  bool residual_fallback = false;  // residual packed by FFD
};

// Expects a profile without a size-zero class.
DistributionVector MakeDistributionVector(const SizeProfile& prof);

// The vector parallel to d with component sum c. Throws
// Error(kInvalidArgument) unless 0 < c <= length(d).
SegmentVector SegmentOf(const DistributionVector& d, const Rational& c);

TruncatedSegment TruncateSegment(const SegmentVector& seg, const SizeProfile& prof);

// Sweeps c in [1, ceil(2/eps)] and delta over the multiples of eps in
// (eps, 1/2], keeps for each c the delta with the smallest cover, then the c
// with the smallest packing ratio. Ties go to the smaller delta / c. Cells
// with c > length(d) are recorded as empty. Throws Error(kNoFeasiblePlan)
// when no cell has a cover.
PartitionPlan SweepParameters(const DistributionVector& d, const SizeProfile& prof,
                              const Rational& eps, const PartitionOptions& options = {});

// Places items into the slots of a cover, entries in order, each copy of an
// entry one bin. Bins that receive nothing are not opened. Throws
// Error(kInfeasibleCover) when the cover has fewer slots than items of some
// size.
Packing CoverToPacking(const Cover& cover, const Instance& inst);

// Count vectors of the bins of a packing, over the positive-size profile.
Cover CoverFromPacking(const Instance& inst, const Packing& packing);

// The partition scheme end to end. Falls back to FFD (fallback == true) when
// the sweep finds no plan.
PartitionResult AlgorithmB(const Instance& inst, const Rational& eps,
                           const PartitionOptions& options = {});

}  // namespace binlab

#endif  // BINLAB_PARTITION_HPP_
