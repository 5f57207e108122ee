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

#include "binlab/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "binlab/error.hpp"
#include "json.hpp"

namespace binlab {

using nlohmann::json;

Instance::Instance(std::int64_t grid, std::vector<std::int64_t> sizes,
                   std::int64_t bin_count, std::vector<std::int64_t> capacities,
                   bool allow_empty)
    : grid_(grid),
      sizes_(std::move(sizes)),
      bin_count_(bin_count),
      capacities_(std::move(capacities)),
      allow_empty_(allow_empty) {
  if (grid_ < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid must be positive, got " + std::to_string(grid_));
  }
  if (bin_count_ < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "bin count must be at least 1, got " +
                    std::to_string(bin_count_));
  }
  if (sizes_.empty() && !allow_empty_) {
    throw Error(ErrorKind::kInvalidArgument,
                "instance has no items and allow_empty is not set");
  }
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 0 || sizes_[i] > grid_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "item " + std::to_string(i) + " size " +
                      std::to_string(sizes_[i]) + "/" + std::to_string(grid_) +
                      " outside [0,1]");
    }
  }
  if (capacities_.empty()) {
    capacities_.assign(static_cast<std::size_t>(bin_count_), grid_);
  }
  if (static_cast<std::int64_t>(capacities_.size()) != bin_count_) {
    throw Error(ErrorKind::kInvalidArgument,
                "capacity list has " + std::to_string(capacities_.size()) +
                    " entries for " + std::to_string(bin_count_) + " bins");
  }
  for (std::int64_t c : capacities_) {
    if (c < 0 || c > grid_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bin capacity " + std::to_string(c) + "/" +
                      std::to_string(grid_) + " outside [0,1]");
    }
  }
  regular_ = std::all_of(capacities_.begin(), capacities_.end(),
                         [this](std::int64_t c) { return c == grid_; });
}

Instance Instance::Regular(std::int64_t grid, std::vector<std::int64_t> sizes,
                           bool allow_empty) {
  const auto m = std::max<std::int64_t>(1, static_cast<std::int64_t>(sizes.size()));
  return Instance(grid, std::move(sizes), m, {}, allow_empty);
}

std::int64_t Instance::capacity(std::int64_t b) const {
  if (b >= 0 && b < bin_count_) return capacities_[static_cast<std::size_t>(b)];
  return grid_;
}

std::int64_t Instance::total() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::int64_t{0});
}

std::int64_t CountOpened(const Instance& inst,
                         std::span<const std::int64_t> assignment) {
  std::set<std::int64_t> used;
  for (std::int64_t b : assignment) {
    if (b >= 0 && inst.capacity(b) == inst.grid()) used.insert(b);
  }
  return static_cast<std::int64_t>(used.size());
}

Packing MakePacking(const Instance& inst, std::vector<std::int64_t> assignment) {
  Packing p;
  p.bins_opened = CountOpened(inst, assignment);
  p.assignment = std::move(assignment);
  return p;
}

std::int64_t SizeProfile::n() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t SizeProfile::IndexOf(std::int64_t size_num) const {
  auto it = std::lower_bound(sizes.begin(), sizes.end(), size_num);
  if (it == sizes.end() || *it != size_num) return -1;
  return it - sizes.begin();
}

std::vector<std::int64_t> SizeProfile::Expand() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(counts[i]), sizes[i]);
  }
  return out;
}

SizeProfile SizeProfile::WithoutZero() const {
  SizeProfile out = *this;
  if (!out.sizes.empty() && out.sizes.front() == 0) {
    out.sizes.erase(out.sizes.begin());
    out.counts.erase(out.counts.begin());
  }
  return out;
}

SizeProfile Profile(const Instance& inst) {
  std::map<std::int64_t, std::int64_t> histogram;
  for (std::int64_t s : inst.sizes()) ++histogram[s];
  SizeProfile prof;
  prof.grid = inst.grid();
  for (const auto& [size, count] : histogram) {
    prof.sizes.push_back(size);
    prof.counts.push_back(count);
  }
  return prof;
}

ValidityReport ValidatePacking(const Instance& inst, const Packing& p) {
  ValidityReport report;
  auto fail = [&report](Violation v, std::int64_t item, std::int64_t bin,
                        std::string msg) {
    report.violation = v;
    report.item = item;
    report.bin = bin;
    report.message = std::move(msg);
    return report;
  };
  if (p.assignment.size() != inst.size()) {
    return fail(Violation::kLengthMismatch, -1, -1,
                "assignment lists " + std::to_string(p.assignment.size()) +
                    " items, instance has " + std::to_string(inst.size()));
  }
  std::map<std::int64_t, std::int64_t> load;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const std::int64_t b = p.assignment[i];
    const auto item = static_cast<std::int64_t>(i);
    if (b == kNoBin) {
      if (inst.sizes()[i] != 0) {
        return fail(Violation::kUnassigned, item, -1,
                    "item " + std::to_string(i) + " is not assigned");
      }
      continue;
    }
    if (b < 0) {
      return fail(Violation::kBadBinIndex, item, b,
                  "item " + std::to_string(i) + " has bin index " +
                      std::to_string(b));
    }
    load[b] += inst.sizes()[i];
  }
  for (const auto& [b, total] : load) {
    if (total > inst.capacity(b)) {
      return fail(Violation::kCapacityOverflow, -1, b,
                  "bin " + std::to_string(b) + " holds " +
                      std::to_string(total) + "/" + std::to_string(inst.grid()) +
                      " > capacity " + std::to_string(inst.capacity(b)) + "/" +
                      std::to_string(inst.grid()));
    }
  }
  const std::int64_t opened = CountOpened(inst, p.assignment);
  if (opened != p.bins_opened) {
    return fail(Violation::kOpenedMismatch, -1, -1,
                "bins_opened is " + std::to_string(p.bins_opened) +
                    ", assignment opens " + std::to_string(opened));
  }
  return report;
}

namespace {

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

std::int64_t RequireInt(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("missing field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::kParse,
                std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "instance must be an object");
  const std::int64_t grid = RequireInt(doc, "grid");
  const std::int64_t bins = RequireInt(doc, "bins");
  if (!doc.contains("items") || !doc["items"].is_array()) {
    throw Error(ErrorKind::kParse, "missing array \"items\"");
  }
  std::vector<std::int64_t> sizes;
  for (const json& run : doc["items"]) {
    if (!run.is_object()) throw Error(ErrorKind::kParse, "item run must be an object");
    if (run.contains("size_num") && run["size_num"].is_number_float()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "size " + run["size_num"].dump() +
                      " is not representable on grid " + std::to_string(grid));
    }
    const std::int64_t num = RequireInt(run, "size_num");
    const std::int64_t count = run.contains("count") ? RequireInt(run, "count") : 1;
    if (count < 0) throw Error(ErrorKind::kParse, "negative item count");
    if (num < 0 || num > grid) {
      throw Error(ErrorKind::kInvalidArgument,
                  "size " + std::to_string(num) + "/" + std::to_string(grid) +
                      " outside [0,1]");
    }
    sizes.insert(sizes.end(), static_cast<std::size_t>(count), num);
  }
  std::vector<std::int64_t> capacities;
  if (doc.contains("capacities_num")) {
    for (const json& c : doc["capacities_num"]) {
      if (!c.is_number_integer()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "capacity " + c.dump() + " is not representable on grid " +
                        std::to_string(grid));
      }
      capacities.push_back(c.get<std::int64_t>());
    }
  }
  const bool allow_empty = doc.value("allow_empty", false);
  return Instance(grid, std::move(sizes), bins, std::move(capacities), allow_empty);
}

std::string SerializeInstance(const Instance& inst) {
  json items = json::array();
  const auto sizes = inst.sizes();
  for (std::size_t i = 0; i < sizes.size();) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    items.push_back({{"size_num", sizes[i]}, {"count", j - i}});
    i = j;
  }
  json doc = {{"grid", inst.grid()}, {"items", items}, {"bins", inst.bin_count()}};
  if (!inst.is_regular()) {
    doc["capacities_num"] = std::vector<std::int64_t>(inst.capacities().begin(),
                                                      inst.capacities().end());
  }
  if (inst.allow_empty()) doc["allow_empty"] = true;
  return doc.dump();
}

Packing ParsePacking(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object() || !doc.contains("assignment") ||
      !doc["assignment"].is_array()) {
    throw Error(ErrorKind::kParse, "packing needs an \"assignment\" array");
  }
  Packing p;
  for (const json& b : doc["assignment"]) {
    if (!b.is_number_integer()) throw Error(ErrorKind::kParse, "bin index must be an integer");
    p.assignment.push_back(b.get<std::int64_t>());
  }
  p.bins_opened = RequireInt(doc, "bins_opened");
  return p;
}

std::string SerializePacking(const Packing& p) {
  return json{{"assignment", p.assignment}, {"bins_opened", p.bins_opened}}.dump();
}

}  // namespace binlab
