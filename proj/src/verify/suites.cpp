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

#include "binlab/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "binlab/config_cover.hpp"
#include "binlab/error.hpp"
#include "binlab/exact.hpp"
#include "binlab/heuristics.hpp"
#include "binlab/irregular_dp.hpp"
#include "binlab/partition.hpp"
#include "binlab/verify/oracles.hpp"

namespace binlab::verify {
namespace {

constexpr std::int64_t kNodeBudget = 2000000;
constexpr std::size_t kStateBudget = 5000000;
constexpr std::size_t kConfigCap = 200000;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::int64_t Uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::int64_t> Runs(std::initializer_list<std::pair<std::int64_t, std::int64_t>> runs) {
  std::vector<std::int64_t> sizes;
  for (const auto& [size, count] : runs) sizes.insert(sizes.end(), static_cast<std::size_t>(count), size);
  return sizes;
}

std::string Join(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + ToString(v[i]);
  return out + ")";
}

struct CoverSize {
  std::int64_t size = 0;
  bool optimal = true;
};

// Smallest cover over the given config sets; nullopt when none covers.
std::optional<CoverSize> BestOver(const SegmentVector& target,
                                  const std::vector<ConfigSet>& sets) {
  std::optional<CoverSize> best;
  for (const auto& set : sets) {
    if (set.empty()) continue;
    try {
      const CoverResult r = MinCover(target, set, kNodeBudget);
      if (!best || r.cover.size() < best->size) best = CoverSize{r.cover.size(), r.optimal};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUncoverable) throw;
    }
  }
  return best;
}

}  // namespace

void VerifyContext::Note(std::string text) {
  if (notes_.size() < 20) notes_.push_back(std::move(text));
}

void VerifyContext::CheckPacking(const Instance& inst, const Packing& packing,
                                 std::string_view who) {
  ++packings_checked_;
  const ValidityReport report = ValidatePacking(inst, packing);
  if (!report.ok()) {
    ++packing_failures_;
    Note(std::string(who) + ": " + report.message);
  }
}

void VerifyContext::CheckBaselines(const Instance& inst, std::int64_t opt) {
  ++baseline_instances_;
  const Packing nf = NextFit(inst);
  const Packing ff = FirstFit(inst);
  const Packing bf = BestFit(inst);
  const Packing nfd = DecreasingVariant(inst, FitRule::kNext);
  const Packing ffd = DecreasingVariant(inst, FitRule::kFirst);
  const Packing bfd = DecreasingVariant(inst, FitRule::kBest);
  CheckPacking(inst, nf, "nf");
  CheckPacking(inst, ff, "ff");
  CheckPacking(inst, bf, "bf");
  CheckPacking(inst, nfd, "nfd");
  CheckPacking(inst, ffd, "ffd");
  CheckPacking(inst, bfd, "bfd");
  // 9 FFD <= 11 OPT + 9 and 10 FF <= 17 OPT + 10.
  const bool ffd_ok = 9 * ffd.bins_opened <= 11 * opt + 9;
  const bool ff_ok = 10 * ff.bins_opened <= 17 * opt + 10;
  if (!ffd_ok || !ff_ok) {
    ++baseline_failures_;
    Note("baseline bound: OPT " + std::to_string(opt) + ", FFD " +
         std::to_string(ffd.bins_opened) + ", FF " + std::to_string(ff.bins_opened));
  }
}

CriterionResult CheckFourClass(VerifyContext& ctx) {
  Stopwatch clock;
  CriterionResult r{1, "Four-class instance reproduction", true, "", 0};
  std::ostringstream why;
  const Instance inst(100, Runs({{52, 600}, {29, 600}, {27, 600}, {21, 1200}}), 1000);
  const SizeProfile prof = Profile(inst);
  const DistributionVector d = MakeDistributionVector(prof);
  const std::vector<std::int64_t> expect_mass = {25200, 16200, 17400, 31200};
  if (inst.size() != 3000 || prof.k() != 4 || d.mass != expect_mass ||
      d.length() != Rational(900)) {
    r.passed = false;
    why << "distribution vector mismatch; ";
  }
  const SegmentVector seg = SegmentOf(d, Rational(15));
  const std::vector<Rational> expect_seg = {Rational(21, 5), Rational(27, 10),
                                            Rational(29, 10), Rational(26, 5)};
  if (seg.target != expect_seg) {
    r.passed = false;
    why << "segment " << Join(seg.target) << "; ";
  }
  const PartitionResult result = AlgorithmB(inst, Rational(1, 10));
  ctx.CheckPacking(inst, result.packing, "partition/four-class");
  const bool packing_ok = ValidatePacking(inst, result.packing).ok();
  if (result.packing.bins_opened != 900 || LowerBoundVolume(inst) != 900 || !packing_ok ||
      result.fallback) {
    r.passed = false;
    why << "bins " << result.packing.bins_opened << "; ";
  }
  r.seconds = clock.seconds();
  if (r.seconds >= 10.0) r.passed = false;
  why << "d=(252,162,174,312) len 900, segment(15)=" << Join(seg.target) << ", bins "
      << result.packing.bins_opened << ", c*=" << (result.plan ? result.plan->c_star : 0);
  r.detail = why.str();
  return r;
}

CriterionResult CheckThreeClass(VerifyContext& ctx) {
  Stopwatch clock;
  CriterionResult r{2, "Three-class instance reproduction", true, "", 0};
  std::ostringstream why;
  const Instance inst(100, Runs({{60, 1000}, {65, 1000}, {75, 1000}}), 3000);
  const SizeProfile prof = Profile(inst);
  const DistributionVector d = MakeDistributionVector(prof);
  if (d.mass != std::vector<std::int64_t>{60000, 65000, 75000} || d.length() != Rational(2000)) {
    r.passed = false;
    why << "distribution vector mismatch; ";
  }
  const SegmentVector seg = SegmentOf(d, Rational(20));
  if (seg.target != std::vector<Rational>{Rational(6), Rational(13, 2), Rational(15, 2)}) {
    r.passed = false;
    why << "segment " << Join(seg.target) << "; ";
  }
  // Every delta below 2/5 on a 1/100 grid: no cover of the segment.
  int infeasible = 0;
  for (std::int64_t j = 1; j < 40; ++j) {
    const ConfigSet set = EnumerateConfigs(prof, Rational(j, 100), kConfigCap);
    bool covered = false;
    if (!set.empty()) {
      try {
        MinCover(seg, set, kNodeBudget);
        covered = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUncoverable) throw;
      }
    }
    if (covered) {
      r.passed = false;
      why << "delta " << j << "/100 covers; ";
    } else {
      ++infeasible;
    }
  }
  const ConfigSet at_040 = EnumerateConfigs(prof, Rational(2, 5), kConfigCap);
  const CoverResult cover = MinCover(seg, at_040, kNodeBudget);
  if (cover.cover.size() != 30 || !cover.optimal ||
      Rational(cover.cover.size(), 20) != Rational(3, 2)) {
    r.passed = false;
    why << "cover at c=20 is " << cover.cover.size() << "; ";
  }
  const PartitionResult result = AlgorithmB(inst, Rational(1, 10));
  ctx.CheckPacking(inst, result.packing, "partition/three-class");
  const Instance scaled(100, Runs({{60, 10}, {65, 10}, {75, 10}}), 30);
  const ExactResult opt = ExactOpt(scaled, kNodeBudget);
  ctx.CheckPacking(scaled, opt.packing, "exact/three-class-scaled");
  if (opt.optimal) ctx.CheckBaselines(scaled, opt.upper);
  if (result.packing.bins_opened != 3000 || !opt.optimal || opt.upper != 30 ||
      !ValidatePacking(inst, result.packing).ok()) {
    r.passed = false;
    why << "bins " << result.packing.bins_opened << ", scaled OPT " << opt.upper << "; ";
  }
  r.seconds = clock.seconds();
  if (r.seconds >= 10.0) r.passed = false;
  why << "d=(600,650,750) len 2000, " << infeasible
      << "/39 deltas < 2/5 uncoverable, min cover at c=20 = " << cover.cover.size()
      << " (ratio 3/2), bins " << result.packing.bins_opened << ", scaled OPT " << opt.upper;
  r.detail = why.str();
  return r;
}

CriterionResult CheckDpExactness(VerifyContext& ctx, int count) {
  Stopwatch clock;
  CriterionResult r{3, "DP exactness on the delta grid", true, "", 0};
  std::mt19937_64 rng(20260301);
  const Rational deltas[] = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  int mismatches = 0;
  for (int t = 0; t < count; ++t) {
    const Rational delta = deltas[t % 3];
    const std::int64_t step = (delta * 12).numerator();  // grid 12
    const std::int64_t n = Uniform(rng, 1, 12);
    std::vector<std::int64_t> sizes;
    for (std::int64_t i = 0; i < n; ++i) sizes.push_back(step * Uniform(rng, 1, 12 / step));
    const Instance inst = Instance::Regular(12, sizes);
    const DpResult dp = SolveOnGrid(inst, delta, kStateBudget);
    const ExactResult opt = ExactOpt(inst, kNodeBudget);
    ctx.CheckPacking(inst, dp.packing, "dp");
    ctx.CheckPacking(inst, opt.packing, "exact");
    const std::int64_t brute = ExhaustivePartitionOpt(sizes, 12);
    if (!opt.optimal || opt.upper != brute || dp.regular_bins_opened != brute) {
      ++mismatches;
      continue;
    }
    ctx.CheckBaselines(inst, opt.upper);
  }
  r.seconds = clock.seconds();
  r.passed = mismatches == 0 && r.seconds < 60.0;
  r.detail = std::to_string(count) + " instances, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult CheckRoundedRatio(VerifyContext& ctx, int count) {
  Stopwatch clock;
  CriterionResult r{4, "Rounded DP ratio (eps=1/5, c=2)", true, "", 0};
  std::mt19937_64 rng(20260302);
  const Rational eps(1, 5);
  const std::int64_t c = 2;
  const Rational factor = Rational(1) + eps / c + Rational(1, c);
  int violations = 0;
  Rational worst(0);
  for (int t = 0; t < count; ++t) {
    const std::int64_t n = Uniform(rng, 1, 12);
    std::vector<std::int64_t> sizes;
    for (std::int64_t i = 0; i < n; ++i) sizes.push_back(Uniform(rng, 21, 100));
    const Instance inst = Instance::Regular(100, sizes);
    const DpResult dp = SolveRounded(inst, eps, c, kStateBudget);
    const ExactResult opt = ExactOpt(inst, kNodeBudget);
    ctx.CheckPacking(inst, dp.packing, "dp-rounded");
    ctx.CheckPacking(inst, opt.packing, "exact");
    const std::int64_t brute = ExhaustivePartitionOpt(sizes, 100);
    if (!opt.optimal || opt.upper != brute ||
        dp.regular_bins_opened > Ceil(factor * brute)) {
      ++violations;
      continue;
    }
    worst = std::max(worst, Rational(dp.regular_bins_opened, opt.upper));
    ctx.CheckBaselines(inst, opt.upper);
  }
  r.seconds = clock.seconds();
  r.passed = violations == 0 && r.seconds < 120.0;
  r.detail = std::to_string(count) + " instances, bound ceil(" + ToString(factor) +
             " OPT), " + std::to_string(violations) + " violations, worst opened/OPT " +
             ToString(worst);
  return r;
}

std::vector<CriterionResult> CheckCoverBounds(VerifyContext& ctx, int count) {
  Stopwatch clock;
  CriterionResult thm{5, "Cover size vs min-cover (k*l + 2c*)", true, "", 0};
  CriterionResult lem{6, "Truncation inequalities", true, "", 0};
  std::mt19937_64 rng(20260303);
  const Rational eps(1, 10);
  const std::int64_t grid = 20;
  int accepted = 0, rejected = 0, thm_bad = 0, lem3_bad = 0, lem4_bad = 0;
  while (accepted < count && rejected < 20 * count) {
    // k <= 3 distinct sizes in [3/20, 19/20], total length in [1, 8].
    const std::int64_t k = Uniform(rng, 1, 3);
    std::vector<std::int64_t> classes;
    while (static_cast<std::int64_t>(classes.size()) < k) {
      const std::int64_t s = Uniform(rng, 3, 19);
      if (std::find(classes.begin(), classes.end(), s) == classes.end()) classes.push_back(s);
    }
    const std::int64_t goal = Uniform(rng, grid, 8 * grid);
    std::vector<std::int64_t> sizes = classes;
    std::int64_t total = 0;
    for (std::int64_t s : sizes) total += s;
    for (int tries = 0; total < goal && tries < 200; ++tries) {
      const std::int64_t s = classes[static_cast<std::size_t>(Uniform(rng, 0, k - 1))];
      if (total + s > 8 * grid) continue;
      sizes.push_back(s);
      total += s;
    }
    if (total < grid || total > 8 * grid) {
      ++rejected;
      continue;
    }
    std::shuffle(sizes.begin(), sizes.end(), rng);
    const Instance inst = Instance::Regular(grid, sizes);
    const SizeProfile prof = Profile(inst);
    const DistributionVector d = MakeDistributionVector(prof);

    std::vector<ConfigSet> sets;
    for (std::int64_t m = 2; eps * m <= Rational(1, 2); ++m) {
      sets.push_back(EnumerateConfigs(prof, eps * m, kConfigCap));
    }
    PartitionPlan plan;
    try {
      plan = SweepParameters(d, prof, eps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNoFeasiblePlan) throw;
      ++rejected;
      continue;
    }
    const SegmentVector whole{[&] {
      std::vector<Rational> t;
      for (std::size_t i = 0; i < d.k(); ++i) t.push_back(d.component(i));
      return t;
    }()};
    const auto mc_whole = BestOver(whole, sets);
    const auto mc_seg = BestOver(plan.segment, sets);
    const TruncatedSegment trunc = TruncateSegment(plan.segment, prof);
    const auto mc_trunc = BestOver(trunc.AsSegment(), sets);
    const bool all_exact = mc_whole && mc_seg && mc_trunc && mc_whole->optimal &&
                           mc_seg->optimal && mc_trunc->optimal &&
                           std::all_of(plan.table.begin(), plan.table.end(),
                                       [](const SweepCell& c) { return c.optimal; });
    if (!all_exact) {
      ++rejected;
      continue;
    }
    ++accepted;
    const PartitionResult result = AlgorithmB(inst, eps);
    ctx.CheckPacking(inst, result.packing, "partition");
    const auto kk = static_cast<std::int64_t>(prof.k());
    const std::int64_t l = plan.copies;
    if (result.cover.size() > mc_whole->size + kk * l + 2 * plan.c_star) ++thm_bad;
    if (mc_seg->size > mc_trunc->size + kk) ++lem3_bad;
    if (l * mc_trunc->size > mc_whole->size) ++lem4_bad;

    const ExactResult opt = ExactOpt(inst, 200000);
    ctx.CheckPacking(inst, opt.packing, "exact");
    if (opt.optimal) ctx.CheckBaselines(inst, opt.upper);
  }
  const double seconds = clock.seconds();
  thm.seconds = lem.seconds = seconds;
  thm.passed = accepted == count && thm_bad == 0;
  lem.passed = accepted == count && lem3_bad == 0 && lem4_bad == 0;
  thm.detail = std::to_string(accepted) + " instances (" + std::to_string(rejected) +
               " generated without an exact plan), " + std::to_string(thm_bad) + " violations";
  lem.detail = std::to_string(accepted) + " instances, min-cover(T) <= min-cover(T^t) + k: " +
               std::to_string(lem3_bad) + " violations; l*min-cover(T^t) <= min-cover(d): " +
               std::to_string(lem4_bad) + " violations";
  return {thm, lem};
}

CriterionResult CheckOracleChain(VerifyContext& ctx, int count) {
  Stopwatch clock;
  CriterionResult r{7, "Oracle chain (branch-and-bound vs set partitions)", true, "", 0};
  std::mt19937_64 rng(20260304);
  const std::int64_t grids[] = {10, 20, 100};
  int mismatches = 0;
  for (int t = 0; t < count; ++t) {
    const std::int64_t grid = grids[t % 3];
    const std::int64_t n = Uniform(rng, 1, 10);
    std::vector<std::int64_t> sizes;
    for (std::int64_t i = 0; i < n; ++i) sizes.push_back(Uniform(rng, 1, grid));
    const Instance inst = Instance::Regular(grid, sizes);
    const ExactResult opt = ExactOpt(inst, kNodeBudget);
    ctx.CheckPacking(inst, opt.packing, "exact");
    const std::int64_t brute = ExhaustivePartitionOpt(sizes, grid);
    if (!opt.optimal || opt.upper != brute) {
      ++mismatches;
      continue;
    }
    ctx.CheckBaselines(inst, opt.upper);
  }
  r.seconds = clock.seconds();
  r.passed = mismatches == 0;
  r.detail = std::to_string(count) + " instances, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult CheckUniversalValidity(const VerifyContext& ctx) {
  CriterionResult r{8, "Universal packing validity", true, "", 0};
  r.passed = ctx.packings_checked() > 0 && ctx.packing_failures() == 0;
  r.detail = std::to_string(ctx.packings_checked()) + " packings validated, " +
             std::to_string(ctx.packing_failures()) + " invalid";
  return r;
}

CriterionResult CheckBaselineSanity(const VerifyContext& ctx) {
  CriterionResult r{9, "Baseline sanity (FFD <= 11/9 OPT + 1, FF <= 1.7 OPT + 1)", true, "", 0};
  r.passed = ctx.baseline_instances() > 0 && ctx.baseline_failures() == 0;
  r.detail = std::to_string(ctx.baseline_instances()) + " oracle-checked instances, " +
             std::to_string(ctx.baseline_failures()) + " violations";
  return r;
}

std::vector<CriterionResult> RunSuite(std::string_view suite) {
  const bool examples = suite == "examples" || suite == "all";
  const bool bounds = suite == "bounds" || suite == "all";
  if (!examples && !bounds) {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown suite \"" + std::string(suite) + "\" (expected examples|bounds|all)");
  }
  VerifyContext ctx;
  std::vector<CriterionResult> results;
  if (examples) {
    results.push_back(CheckFourClass(ctx));
    results.push_back(CheckThreeClass(ctx));
  }
  if (bounds) {
    results.push_back(CheckDpExactness(ctx));
    results.push_back(CheckRoundedRatio(ctx));
    for (auto& c : CheckCoverBounds(ctx)) results.push_back(std::move(c));
    results.push_back(CheckOracleChain(ctx));
    results.push_back(CheckUniversalValidity(ctx));
    results.push_back(CheckBaselineSanity(ctx));
  }
  return results;
}

std::string FormatResult(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " -- "
      << r.detail;
  if (r.seconds > 0) {
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " (" << r.seconds << " s)";
  }
  return out.str();
}

}  // namespace binlab::verify
