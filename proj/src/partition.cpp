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

#include "binlab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "binlab/error.hpp"
#include "binlab/heuristics.hpp"

namespace binlab {

std::int64_t DistributionVector::length_num() const {
  return std::accumulate(mass.begin(), mass.end(), std::int64_t{0});
}

DistributionVector MakeDistributionVector(const SizeProfile& prof) {
  DistributionVector d;
  d.grid = prof.grid;
  d.sizes = prof.sizes;
  d.mass.reserve(prof.k());
  for (std::size_t i = 0; i < prof.k(); ++i) {
    if (prof.sizes[i] <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "distribution vector needs positive sizes; drop size-zero items first");
    }
    d.mass.push_back(prof.counts[i] * prof.sizes[i]);
  }
  return d;
}

SegmentVector SegmentOf(const DistributionVector& d, const Rational& c) {
  const std::int64_t total = d.length_num();
  if (c <= 0 || c > d.length()) {
    throw Error(ErrorKind::kInvalidArgument,
                "segment length " + ToString(c) + " outside (0, " +
                    ToString(d.length()) + "]");
  }
  SegmentVector seg;
  seg.target.reserve(d.k());
  // mass_i/G * c / (total/G): the grid cancels.
  for (std::int64_t m : d.mass) seg.target.push_back(Rational(m) * c / Rational(total));
  return seg;
}

TruncatedSegment TruncateSegment(const SegmentVector& seg, const SizeProfile& prof) {
  if (seg.k() != prof.k()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "segment has " + std::to_string(seg.k()) + " components, profile " +
                    std::to_string(prof.k()));
  }
  TruncatedSegment t;
  for (std::size_t i = 0; i < seg.k(); ++i) {
    const std::int64_t count =
        seg.target[i] <= 0 ? 0 : Floor(seg.target[i] * prof.grid / prof.sizes[i]);
    t.counts.push_back(count);
    t.mass.push_back(Rational(count * prof.sizes[i], prof.grid));
  }
  return t;
}

namespace {

struct BestCover {
  std::optional<CoverResult> result;
  Rational delta;
};

// Smallest cover of `target` over the given deltas, ties to the smaller delta.
BestCover CoverOverDeltas(const SegmentVector& target,
                          const std::vector<const ConfigSet*>& sets,
                          std::int64_t node_budget, std::vector<SweepCell>* table,
                          std::int64_t c) {
  BestCover best;
  for (const ConfigSet* set : sets) {
    SweepCell cell{c, set->delta, std::nullopt, true};
    if (!set->empty()) {
      try {
        CoverResult r = MinCover(target, *set, node_budget);
        cell.cover_size = r.cover.size();
        cell.optimal = r.optimal;
        if (!best.result || r.cover.size() < best.result->cover.size()) {
          best.result = std::move(r);
          best.delta = set->delta;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUncoverable) throw;
      }
    }
    if (table) table->push_back(cell);
  }
  return best;
}

std::vector<Rational> MultiplesUpToHalf(const Rational& eps, std::int64_t first) {
  std::vector<Rational> out;
  for (std::int64_t m = first; eps * m <= Rational(1, 2); ++m) out.push_back(eps * m);
  return out;
}

struct SlotFill {
  std::vector<std::int64_t> assignment;
  std::int64_t bins = 0;
  std::vector<std::size_t> leftover;  // items no slot received
};

SlotFill FillSlots(const Cover& cover, const Instance& inst, const SizeProfile& prof) {
  SlotFill fill;
  fill.assignment.assign(inst.size(), kNoBin);
  std::vector<std::vector<std::size_t>> queue(prof.k());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.sizes()[i] == 0) continue;
    queue[static_cast<std::size_t>(prof.IndexOf(inst.sizes()[i]))].push_back(i);
  }
  std::vector<std::size_t> head(prof.k(), 0);
  std::size_t waiting = 0;
  for (const auto& q : queue) waiting += q.size();

  for (const auto& entry : cover.entries()) {
    for (std::int64_t rep = 0; rep < entry.multiplicity && waiting > 0; ++rep) {
      bool used = false;
      for (std::size_t i = 0; i < prof.k(); ++i) {
        for (std::int64_t slot = 0; slot < entry.counts[i] && head[i] < queue[i].size();
             ++slot) {
          fill.assignment[queue[i][head[i]++]] = fill.bins;
          --waiting;
          used = true;
        }
      }
      if (used) ++fill.bins;
    }
  }
  for (std::size_t i = 0; i < prof.k(); ++i) {
    fill.leftover.insert(fill.leftover.end(),
                         queue[i].begin() + static_cast<std::ptrdiff_t>(head[i]),
                         queue[i].end());
  }
  std::sort(fill.leftover.begin(), fill.leftover.end());
  return fill;
}

}  // namespace

PartitionPlan SweepParameters(const DistributionVector& d, const SizeProfile& prof,
                              const Rational& eps, const PartitionOptions& options) {
  if (eps <= 0 || eps >= Rational(1, 2)) {
    throw Error(ErrorKind::kInvalidArgument,
                "eps must lie in (0, 1/2), got " + ToString(eps));
  }
  if (d.k() == 0 || d.k() != prof.k()) {
    throw Error(ErrorKind::kNoFeasiblePlan, "nothing to partition");
  }

  std::vector<ConfigSet> sets;
  for (const Rational& delta : MultiplesUpToHalf(eps, 1)) {
    sets.push_back(EnumerateConfigs(prof, delta, options.config_cap));
  }
  std::vector<const ConfigSet*> sweep_sets;  // multiples strictly above eps
  std::vector<const ConfigSet*> residual_sets;
  for (const auto& set : sets) {
    residual_sets.push_back(&set);
    if (set.delta > eps) sweep_sets.push_back(&set);
  }

  PartitionPlan plan;
  std::optional<CoverResult> chosen;
  const std::int64_t max_c = Ceil(Rational(2) / eps);
  for (std::int64_t c = 1; c <= max_c; ++c) {
    if (Rational(c) > d.length()) {
      for (const ConfigSet* set : sweep_sets) {
        plan.table.push_back(SweepCell{c, set->delta, std::nullopt, true});
      }
      continue;
    }
    const SegmentVector seg = SegmentOf(d, Rational(c));
    BestCover best =
        CoverOverDeltas(seg, sweep_sets, options.node_budget, &plan.table, c);
    if (!best.result) continue;
    const Rational ratio(best.result->cover.size(), c);
    if (!chosen || ratio < plan.ratio) {
      plan.c_star = c;
      plan.delta_star = best.delta;
      plan.ratio = ratio;
      plan.segment = seg;
      chosen = std::move(best.result);
    }
  }
  if (!chosen) {
    throw Error(ErrorKind::kNoFeasiblePlan,
                "no (c, delta) cell admits a delta-cover for eps " + ToString(eps));
  }
  plan.segment_cover = std::move(chosen->cover);
  plan.copies = Floor(d.length() / plan.c_star);

  plan.residual.target.resize(d.k());
  for (std::size_t i = 0; i < d.k(); ++i) {
    plan.residual.target[i] = d.component(i) - plan.segment.target[i] * plan.copies;
  }
  BestCover residual =
      CoverOverDeltas(plan.residual, residual_sets, options.node_budget, nullptr, 0);
  if (residual.result) {
    plan.residual_cover = std::move(residual.result->cover);
    plan.residual_delta = residual.delta;
  } else {
    plan.residual_covered = false;
    plan.residual_cover = Cover(d.k());
  }
  return plan;
}

Packing CoverToPacking(const Cover& cover, const Instance& inst) {
  const SizeProfile prof = Profile(inst).WithoutZero();
  if (!cover.empty() && cover.k() != prof.k()) {
    throw Error(ErrorKind::kInfeasibleCover,
                "cover has " + std::to_string(cover.k()) + " classes, instance " +
                    std::to_string(prof.k()));
  }
  const auto slots = cover.empty() ? std::vector<std::int64_t>(prof.k(), 0) : cover.Slots();
  for (std::size_t i = 0; i < prof.k(); ++i) {
    if (slots[i] < prof.counts[i]) {
      throw Error(ErrorKind::kInfeasibleCover,
                  "cover has " + std::to_string(slots[i]) + " slots for " +
                      std::to_string(prof.counts[i]) + " items of size " +
                      std::to_string(prof.sizes[i]) + "/" + std::to_string(prof.grid));
    }
  }
  SlotFill fill = FillSlots(cover, inst, prof);
  return MakePacking(inst, std::move(fill.assignment));
}

Cover CoverFromPacking(const Instance& inst, const Packing& packing) {
  const SizeProfile prof = Profile(inst).WithoutZero();
  std::map<std::int64_t, std::vector<std::int64_t>> bins;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const std::int64_t b = packing.assignment[i];
    if (b < 0 || inst.sizes()[i] == 0) continue;
    auto& counts = bins[b];
    counts.resize(prof.k(), 0);
    ++counts[static_cast<std::size_t>(prof.IndexOf(inst.sizes()[i]))];
  }
  Cover cover(prof.k());
  for (const auto& [b, counts] : bins) cover.Add(counts);
  return cover;
}

PartitionResult AlgorithmB(const Instance& inst, const Rational& eps,
                           const PartitionOptions& options) {
  if (!inst.is_regular()) {
    throw Error(ErrorKind::kInvalidArgument, "partition scheme needs a regular instance");
  }
  if ((eps * inst.grid()).denominator() != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "eps " + ToString(eps) + " is off the instance grid 1/" +
                    std::to_string(inst.grid()));
  }
  if (eps <= 0 || eps >= Rational(1, 2)) {
    throw Error(ErrorKind::kInvalidArgument,
                "eps must lie in (0, 1/2), got " + ToString(eps));
  }
  PartitionResult result;
  const SizeProfile prof = Profile(inst).WithoutZero();
  if (prof.k() == 0) {
    result.cover = Cover(0);
    result.packing = MakePacking(inst, std::vector<std::int64_t>(inst.size(), kNoBin));
    return result;
  }
  const DistributionVector d = MakeDistributionVector(prof);
  try {
    result.plan = SweepParameters(d, prof, eps, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNoFeasiblePlan) throw;
    result.fallback = true;
    result.packing = DecreasingVariant(inst, FitRule::kFirst);
    result.cover = CoverFromPacking(inst, result.packing);
    return result;
  }
  const PartitionPlan& plan = *result.plan;
  const Cover copies = CoverRepeat(plan.segment_cover, plan.copies);
  if (plan.residual_covered) {
    result.cover = CoverUnion(copies, plan.residual_cover);
    result.packing = CoverToPacking(result.cover, inst);
    return result;
  }

  // Residual has no delta-cover: fill what the copies hold, FFD the rest.
  result.residual_fallback = true;
  SlotFill fill = FillSlots(copies, inst, prof);
  std::stable_sort(fill.leftover.begin(), fill.leftover.end(),
                   [&](std::size_t a, std::size_t b) {
                     return inst.sizes()[a] > inst.sizes()[b];
                   });
  std::vector<std::int64_t> sizes;
  for (std::size_t i : fill.leftover) sizes.push_back(inst.sizes()[i]);
  const auto bins = FitSequence(sizes, inst.grid(), FitRule::kFirst);
  std::map<std::int64_t, std::vector<std::int64_t>> extra;
  for (std::size_t pos = 0; pos < fill.leftover.size(); ++pos) {
    fill.assignment[fill.leftover[pos]] = fill.bins + bins[pos];
    auto& counts = extra[bins[pos]];
    counts.resize(prof.k(), 0);
    ++counts[static_cast<std::size_t>(prof.IndexOf(sizes[pos]))];
  }
  result.cover = copies;
  for (const auto& [b, counts] : extra) result.cover.Add(counts);
  result.packing = MakePacking(inst, std::move(fill.assignment));
  return result;
}

}  // namespace binlab
