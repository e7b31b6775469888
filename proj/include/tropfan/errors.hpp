// Copyright 2026 The Authors.
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace tropfan {

// Every failure mode that callers are expected to branch on gets a code.
// Guard codes (SearchTooLarge, EnumerationTooLarge) map to CLI exit 3,
// everything else to exit 1.
enum class Err {
  kEmptyBases,
  kUnequalCardinality,
  kExchangeAxiomViolation,
  kLoopDetected,
  kParameterOutOfRange,
  kNotFullRank,
  kLoopColumn,
  kDimensionMismatch,
  kNotABasis,
  kRankZero,
  kDependentGenerators,
  kNotPure,
  kNotSimplicial,
  kNoBasis,
  kSearchTooLarge,
  kEnumerationTooLarge,
  kBadInput,
};

const char* err_name(Err e);

class TropError : public std::runtime_error {
 public:
  TropError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw TropError(code, msg);
}

inline bool is_guard_error(Err e) {
  return e == Err::kSearchTooLarge || e == Err::kEnumerationTooLarge;
}

}  // namespace tropfan
