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

#include "binlab/exact.hpp"

#include <algorithm>
#include <vector>

#include "binlab/error.hpp"
#include "binlab/heuristics.hpp"

namespace binlab {
namespace {

class PlacementSearch {
 public:
  PlacementSearch(std::vector<std::int64_t> sizes, std::int64_t capacity,
                  std::int64_t lower, std::int64_t node_budget)
      : sizes_(std::move(sizes)),
        capacity_(capacity),
        lower_(lower),
        budget_(node_budget),
        suffix_(sizes_.size() + 1, 0),
        bin_of_(sizes_.size(), 0) {
    for (std::size_t i = sizes_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + sizes_[i];
  }

  void SetIncumbent(std::int64_t bins, std::vector<std::int64_t> placement) {
    best_ = bins;
    best_bin_of_ = std::move(placement);
  }

  void Run() {
    if (best_ > lower_) Place(0, 0);
  }

  std::int64_t best() const { return best_; }
  const std::vector<std::int64_t>& placement() const { return best_bin_of_; }
  std::int64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  void Place(std::size_t pos, std::int64_t used) {
    if (stop_) return;
    if (++nodes_ > budget_) {
      aborted_ = stop_ = true;
      return;
    }
    const auto open = static_cast<std::int64_t>(loads_.size());
    if (pos == sizes_.size()) {
      if (open < best_) {
        best_ = open;
        best_bin_of_ = bin_of_;
        if (best_ == lower_) stop_ = true;
      }
      return;
    }
    // Volume that cannot go into the free space of open bins.
    const std::int64_t overflow = suffix_[pos] - (open * capacity_ - used);
    const std::int64_t extra = overflow > 0 ? (overflow + capacity_ - 1) / capacity_ : 0;
    if (open + extra >= best_) return;

    const std::int64_t s = sizes_[pos];
    std::vector<std::int64_t> tried;
    for (std::size_t b = 0; b < loads_.size() && !stop_; ++b) {
      const std::int64_t load = loads_[b];
      if (load + s > capacity_) continue;
      if (std::find(tried.begin(), tried.end(), load) != tried.end()) continue;
      tried.push_back(load);
      loads_[b] += s;
      bin_of_[pos] = static_cast<std::int64_t>(b);
      Place(pos + 1, used + s);
      loads_[b] -= s;
    }
    if (!stop_ && open + 1 < best_) {
      loads_.push_back(s);
      bin_of_[pos] = open;
      Place(pos + 1, used + s);
      loads_.pop_back();
    }
  }

  std::vector<std::int64_t> sizes_;
  std::int64_t capacity_;
  std::int64_t lower_;
  std::int64_t budget_;
  std::vector<std::int64_t> suffix_;
  std::vector<std::int64_t> loads_;
  std::vector<std::int64_t> bin_of_;
  std::vector<std::int64_t> best_bin_of_;
  std::int64_t best_ = 0;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

}  // namespace

std::int64_t LowerBoundVolume(const Instance& inst) {
  return (inst.total() + inst.grid() - 1) / inst.grid();
}

ExactResult ExactOpt(const Instance& inst, std::int64_t node_budget) {
  if (!inst.is_regular()) {
    throw Error(ErrorKind::kInvalidArgument, "exact solver needs a regular instance");
  }
  std::vector<std::size_t> order;
  for (std::size_t i : DecreasingOrder(inst.sizes())) {
    if (inst.sizes()[i] > 0) order.push_back(i);
  }
  std::vector<std::int64_t> sizes;
  for (std::size_t i : order) sizes.push_back(inst.sizes()[i]);

  const std::int64_t lower = LowerBoundVolume(inst);
  PlacementSearch search(sizes, inst.grid(), lower, node_budget);
  // FFD on the same order is the first incumbent.
  auto ffd = FitSequence(sizes, inst.grid(), FitRule::kFirst);
  const std::int64_t ffd_bins =
      ffd.empty() ? 0 : *std::max_element(ffd.begin(), ffd.end()) + 1;
  search.SetIncumbent(ffd_bins, std::move(ffd));
  search.Run();

  ExactResult result;
  result.upper = search.best();
  result.optimal = !search.aborted();
  result.lower = result.optimal ? result.upper : lower;
  result.nodes = search.nodes();
  std::vector<std::int64_t> assignment(inst.size(), kNoBin);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    assignment[order[pos]] = search.placement()[pos];
  }
  result.packing = MakePacking(inst, std::move(assignment));
  return result;
}

}  // namespace binlab
