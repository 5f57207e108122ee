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

#ifndef BINLAB_ERROR_HPP_
#define BINLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace binlab {

enum class ErrorKind {
  kParse,
  kInvalidArgument,
  kDimensionMismatch,
  kConfigExplosion,
  kUncoverable,
  kInfeasibleCover,
  kNoFeasiblePlan,
  kStuck,
  kStateBudgetExhausted,
  kItemBelowEpsilon,
};

const char* ToString(ErrorKind kind);

// All recoverable failures in the library are reported through this type;
// callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ToString(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace binlab

#endif  // BINLAB_ERROR_HPP_
