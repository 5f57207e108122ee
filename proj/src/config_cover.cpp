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

#include "binlab/config_cover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "binlab/error.hpp"
#include "json.hpp"

namespace binlab {

BinConfig BinConfig::FromCounts(std::vector<std::int64_t> counts,
                                std::span<const std::int64_t> sizes) {
  BinConfig config;
  config.mass.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    config.mass[i] = counts[i] * sizes[i];
    config.length += config.mass[i];
  }
  config.counts = std::move(counts);
  return config;
}

Rational SegmentVector::length() const {
  return std::accumulate(target.begin(), target.end(), Rational(0));
}

void Cover::Add(const std::vector<std::int64_t>& counts, std::int64_t times) {
  if (times <= 0) return;
  if (entries_.empty() && k_ == 0) k_ = counts.size();
  if (counts.size() != k_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "configuration has " + std::to_string(counts.size()) +
                    " classes, cover has " + std::to_string(k_));
  }
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), counts,
      [](const CoverEntry& e, const std::vector<std::int64_t>& c) { return e.counts < c; });
  if (it != entries_.end() && it->counts == counts) {
    it->multiplicity += times;
  } else {
    entries_.insert(it, CoverEntry{counts, times});
  }
}

std::int64_t Cover::size() const {
  std::int64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<std::int64_t> Cover::Slots() const {
  std::vector<std::int64_t> slots(k_, 0);
  for (const auto& e : entries_) {
    for (std::size_t i = 0; i < k_; ++i) slots[i] += e.counts[i] * e.multiplicity;
  }
  return slots;
}

ConfigSet EnumerateConfigs(const SizeProfile& prof, const Rational& delta,
                           std::size_t cap) {
  if (delta <= 0 || delta > Rational(1, 2)) {
    throw Error(ErrorKind::kInvalidArgument,
                "delta must lie in (0, 1/2], got " + ToString(delta));
  }
  if (cap == 0) throw Error(ErrorKind::kInvalidArgument, "config cap must be positive");
  for (std::int64_t s : prof.sizes) {
    if (s <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "configurations are defined over positive sizes only");
    }
  }
  ConfigSet set;
  set.delta = delta;
  set.grid = prof.grid;
  set.sizes = prof.sizes;

  const std::int64_t capacity = prof.grid;
  const std::int64_t min_length = Ceil((Rational(1) - delta) * prof.grid);
  const std::size_t k = prof.k();

  // Largest mass classes i.. could still add to a bin; bounds the search.
  std::vector<std::int64_t> reach(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    reach[i] = std::min(capacity, reach[i + 1] + prof.counts[i] * prof.sizes[i]);
  }

  std::vector<std::int64_t> counts(k, 0);
  auto dfs = [&](auto&& self, std::size_t i, std::int64_t length) -> void {
    if (length + reach[i] < min_length) return;
    if (i == k) {
      if (set.configs.size() == cap) {
        throw Error(ErrorKind::kConfigExplosion,
                    "more than " + std::to_string(cap) +
                        " configurations for delta " + ToString(delta));
      }
      set.configs.push_back(BinConfig::FromCounts(counts, prof.sizes));
      return;
    }
    const std::int64_t most =
        std::min(prof.counts[i], (capacity - length) / prof.sizes[i]);
    for (std::int64_t c = 0; c <= most; ++c) {
      counts[i] = c;
      self(self, i + 1, length + c * prof.sizes[i]);
    }
    counts[i] = 0;
  };
  dfs(dfs, 0, 0);
  return set;
}

std::vector<std::int64_t> DemandCounts(const SegmentVector& target,
                                       std::span<const std::int64_t> sizes,
                                       std::int64_t grid) {
  if (target.k() != sizes.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "target has " + std::to_string(target.k()) + " components, " +
                    std::to_string(sizes.size()) + " size classes");
  }
  std::vector<std::int64_t> demand(sizes.size(), 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (target.target[i] <= 0) continue;
    demand[i] = Ceil(target.target[i] * grid / sizes[i]);
  }
  return demand;
}

namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

class CoverSearch {
 public:
  CoverSearch(std::vector<const BinConfig*> configs, std::vector<std::int64_t> demand,
              std::span<const std::int64_t> sizes, std::int64_t node_budget)
      : configs_(std::move(configs)),
        demand_(std::move(demand)),
        sizes_(sizes.begin(), sizes.end()),
        budget_(node_budget),
        k_(demand_.size()),
        n_(configs_.size()) {
    // Suffix maxima over configurations j.. of per-class counts and of the
    // mass that can land on demanded classes.
    suffix_count_.assign((n_ + 1) * k_, 0);
    suffix_length_.assign(n_ + 1, 0);
    for (std::size_t j = n_; j-- > 0;) {
      std::int64_t useful = 0;
      for (std::size_t i = 0; i < k_; ++i) {
        const std::int64_t c = demand_[i] > 0 ? configs_[j]->counts[i] : 0;
        suffix_count_[j * k_ + i] = std::max(c, suffix_count_[(j + 1) * k_ + i]);
        useful += c * sizes_[i];
      }
      suffix_length_[j] = std::max(useful, suffix_length_[j + 1]);
    }
    remaining_.assign((n_ + 1) * k_, 0);
    choice_.assign(n_, 0);
  }

  CoverResult Run() {
    CoverResult result;
    result.lower_bound = Bound(0, demand_.data());
    Greedy();
    if (best_size_ > result.lower_bound) {
      std::copy(demand_.begin(), demand_.end(), remaining_.begin());
      Search(0, 0);
    }
    result.optimal = !aborted_;
    result.nodes = nodes_;
    result.cover = Cover(k_);
    for (std::size_t j = 0; j < n_; ++j) {
      result.cover.Add(configs_[j]->counts, best_choice_[j]);
    }
    return result;
  }

 private:
  std::int64_t Bound(std::size_t j, const std::int64_t* rem) const {
    std::int64_t bound = 0;
    std::int64_t volume = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (rem[i] <= 0) continue;
      const std::int64_t most = suffix_count_[j * k_ + i];
      if (most == 0) return kInfinity;
      bound = std::max(bound, CeilDiv(rem[i], most));
      volume += rem[i] * sizes_[i];
    }
    if (volume > 0) bound = std::max(bound, CeilDiv(volume, suffix_length_[j]));
    return bound;
  }

  // Largest covered mass first; gives the first incumbent.
  void Greedy() {
    std::vector<std::int64_t> rem = demand_;
    best_choice_.assign(n_, 0);
    best_size_ = 0;
    while (std::any_of(rem.begin(), rem.end(), [](std::int64_t r) { return r > 0; })) {
      std::size_t pick = n_;
      std::int64_t pick_gain = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        std::int64_t gain = 0;
        for (std::size_t i = 0; i < k_; ++i) {
          if (rem[i] > 0) gain += std::min(rem[i], configs_[j]->counts[i]) * sizes_[i];
        }
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = j;
        }
      }
      for (std::size_t i = 0; i < k_; ++i) rem[i] -= configs_[pick]->counts[i];
      ++best_choice_[pick];
      ++best_size_;
    }
  }

  void Search(std::size_t j, std::int64_t used) {
    if (stop_) return;
    if (++nodes_ > budget_) {
      aborted_ = stop_ = true;
      return;
    }
    const std::int64_t* rem = &remaining_[j * k_];
    if (std::all_of(rem, rem + k_, [](std::int64_t r) { return r <= 0; })) {
      if (used < best_size_) {
        best_size_ = used;
        best_choice_.assign(choice_.begin(), choice_.end());
        std::fill(best_choice_.begin() + static_cast<std::ptrdiff_t>(j),
                  best_choice_.end(), 0);
        if (best_size_ == root_bound()) stop_ = true;
      }
      return;
    }
    if (j == n_) return;
    if (used + Bound(j, rem) >= best_size_) return;

    const BinConfig& config = *configs_[j];
    std::int64_t most = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (rem[i] > 0 && config.counts[i] > 0) {
        most = std::max(most, CeilDiv(rem[i], config.counts[i]));
      }
    }
    most = std::min(most, best_size_ - 1 - used);
    std::int64_t* next = &remaining_[(j + 1) * k_];
    for (std::int64_t x = most; x >= 0 && !stop_; --x) {
      for (std::size_t i = 0; i < k_; ++i) next[i] = rem[i] - x * config.counts[i];
      choice_[j] = x;
      Search(j + 1, used + x);
    }
    choice_[j] = 0;
  }

  std::int64_t root_bound() {
    if (root_bound_ < 0) root_bound_ = Bound(0, demand_.data());
    return root_bound_;
  }

  std::vector<const BinConfig*> configs_;
  std::vector<std::int64_t> demand_;
  std::vector<std::int64_t> sizes_;
  std::int64_t budget_;
  std::size_t k_;
  std::size_t n_;
  std::vector<std::int64_t> suffix_count_;
  std::vector<std::int64_t> suffix_length_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::int64_t> choice_;
  std::vector<std::int64_t> best_choice_;
  std::int64_t best_size_ = kInfinity;
  std::int64_t root_bound_ = -1;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

}  // namespace

CoverResult MinCover(const SegmentVector& target, const ConfigSet& configs,
                     std::int64_t node_budget) {
  const auto demand = DemandCounts(target, configs.sizes, configs.grid);
  const std::size_t k = demand.size();
  if (std::all_of(demand.begin(), demand.end(), [](std::int64_t d) { return d == 0; })) {
    CoverResult empty;
    empty.cover = Cover(k);
    empty.optimal = true;
    return empty;
  }

  std::vector<const BinConfig*> useful;
  for (const auto& config : configs.configs) {
    for (std::size_t i = 0; i < k; ++i) {
      if (demand[i] > 0 && config.counts[i] > 0) {
        useful.push_back(&config);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (demand[i] == 0) continue;
    const bool covered = std::any_of(useful.begin(), useful.end(),
                                     [i](const BinConfig* c) { return c->counts[i] > 0; });
    if (!covered) {
      throw Error(ErrorKind::kUncoverable,
                  "no configuration at delta " + ToString(configs.delta) +
                      " holds size " + std::to_string(configs.sizes[i]) + "/" +
                      std::to_string(configs.grid));
    }
  }
  std::stable_sort(useful.begin(), useful.end(),
                   [](const BinConfig* a, const BinConfig* b) {
                     if (a->length != b->length) return a->length > b->length;
                     return a->counts > b->counts;
                   });
  return CoverSearch(std::move(useful), demand, configs.sizes, node_budget).Run();
}

bool CoverFeasible(const Cover& cover, const SegmentVector& target,
                   std::span<const std::int64_t> sizes, std::int64_t grid) {
  if (cover.empty()) {
    return std::all_of(target.target.begin(), target.target.end(),
                       [](const Rational& t) { return t <= 0; });
  }
  if (cover.k() != target.k() || sizes.size() != target.k()) return false;
  const auto slots = cover.Slots();
  for (std::size_t i = 0; i < target.k(); ++i) {
    if (Rational(slots[i] * sizes[i], grid) < target.target[i]) return false;
  }
  return true;
}

Cover CoverUnion(const Cover& a, const Cover& b) {
  if (a.k() != 0 && b.k() != 0 && a.k() != b.k()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cannot unite covers over " + std::to_string(a.k()) + " and " +
                    std::to_string(b.k()) + " classes");
  }
  if (a.empty()) return b;
  if (b.empty()) return a;
  Cover out = a;
  for (const auto& e : b.entries()) out.Add(e.counts, e.multiplicity);
  return out;
}

Cover CoverRepeat(const Cover& a, std::int64_t times) {
  Cover out(a.k());
  if (times <= 0) return out;
  for (const auto& e : a.entries()) out.Add(e.counts, e.multiplicity * times);
  return out;
}

std::string SerializeCover(const Cover& cover) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : cover.entries()) {
    doc.push_back({{"counts", e.counts}, {"multiplicity", e.multiplicity}});
  }
  return doc.dump();
}

Cover ParseCover(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::kParse, "cover must be an array");
  Cover cover;
  for (const auto& e : doc) {
    if (!e.is_object() || !e.contains("counts") || !e.contains("multiplicity")) {
      throw Error(ErrorKind::kParse, "cover entry needs counts and multiplicity");
    }
    try {
      cover.Add(e["counts"].get<std::vector<std::int64_t>>(),
                e["multiplicity"].get<std::int64_t>());
    } catch (const nlohmann::json::type_error& err) {
      throw Error(ErrorKind::kParse, err.what());
    }
  }
  return cover;
}

}  // namespace binlab
