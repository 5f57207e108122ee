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

#ifndef BINLAB_VERIFY_SUITES_HPP_
#define BINLAB_VERIFY_SUITES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "binlab/instance.hpp"

namespace binlab::verify {

// Collects every packing the suites produce, and the baseline ratio checks
// made against a known optimum.
class VerifyContext {
 public:
  void CheckPacking(const Instance& inst, const Packing& packing, std::string_view who);

  // Runs NF, FF, BF, NFD, FFD, BFD on a regular instance with known OPT,
  // validates every packing, and checks FFD <= 11/9 OPT + 1 and
  // FF <= 1.7 OPT + 1.
  void CheckBaselines(const Instance& inst, std::int64_t opt);

  std::int64_t packings_checked() const { return packings_checked_; }
  std::int64_t packing_failures() const { return packing_failures_; }
  std::int64_t baseline_instances() const { return baseline_instances_; }
  std::int64_t baseline_failures() const { return baseline_failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  void Note(std::string text);

  std::int64_t packings_checked_ = 0;
  std::int64_t packing_failures_ = 0;
  std::int64_t baseline_instances_ = 0;
  std::int64_t baseline_failures_ = 0;
  std::vector<std::string> notes_;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult CheckFourClass(VerifyContext& ctx);
CriterionResult CheckThreeClass(VerifyContext& ctx);
CriterionResult CheckDpExactness(VerifyContext& ctx, int count = 200);
CriterionResult CheckRoundedRatio(VerifyContext& ctx, int count = 100);
// Criteria 5 and 6 share one instance family.
std::vector<CriterionResult> CheckCoverBounds(VerifyContext& ctx, int count = 50);
CriterionResult CheckOracleChain(VerifyContext& ctx, int count = 200);
CriterionResult CheckUniversalValidity(const VerifyContext& ctx);
CriterionResult CheckBaselineSanity(const VerifyContext& ctx);

// "examples" (1-2), "bounds" (3-9) or "all" (1-9), in criterion order.
// Error(kInvalidArgument) for other names.
std::vector<CriterionResult> RunSuite(std::string_view suite);

std::string FormatResult(const CriterionResult& r);

}  // namespace binlab::verify

#endif  // BINLAB_VERIFY_SUITES_HPP_
