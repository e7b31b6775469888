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

// Weighted rational polyhedral fans in N = Z^(n+1) / (1,...,1), with the
// balancing (Minkowski weight) check at codimension one.  Vectors are kept
// in a canonical representative of the quotient: full length n+1 with the
// last coordinate zero.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropfan/exactalg.hpp"
#include "tropfan/matroid.hpp"

namespace tropfan {

struct QuotientVector {
  // Canonical representative: length n+1, last coordinate 0.
  std::vector<long long> c;

  static QuotientVector canonical(std::vector<long long> raw);
  static QuotientVector indicator(SetMask subset, int length);

  int length() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  // Coordinates in Z^n after dropping the trailing zero; all lattice
  // computations happen in this chart.
  std::vector<long long> truncated() const;

  bool operator==(const QuotientVector& o) const { return c == o.c; }
  bool operator<(const QuotientVector& o) const { return c < o.c; }
};

struct Cone {
  std::vector<int> rays;  // ascending ray indices; empty = the origin cone
  bool operator==(const Cone& o) const { return rays == o.rays; }
  bool operator<(const Cone& o) const { return rays < o.rays; }
  int dim() const { return static_cast<int>(rays.size()); }
};

class WeightedFan {
 public:
  // Builds the face-closed fan generated by the given maximal cones.
  // Weights run parallel to `maximal` and are attached after the maximal
  // list is sorted.  Duplicate maximal cones are kept so that validation
  // can report them.
  static WeightedFan from_maximal(int ambient_rank,
                                  std::vector<QuotientVector> rays,
                                  std::vector<Cone> maximal,
                                  std::vector<long long> weights);

  int ambient_rank() const { return ambient_rank_; }  // n, the quotient rank
  const std::vector<QuotientVector>& rays() const { return rays_; }
  int dim() const { return static_cast<int>(cones_by_dim_.size()) - 1; }
  const std::vector<Cone>& cones_of_dim(int d) const {
    return cones_by_dim_[d];
  }
  // The maximal cones as given (sorted), with their weights; for a pure fan
  // these are exactly the top-dimensional cones.
  const std::vector<Cone>& maximal() const { return maximal_; }
  const std::vector<long long>& weights() const { return weights_; }

  // Truncated (length-n) primitive generators of the cone's rays.
  std::vector<std::vector<long long>> generators_of(const Cone& c) const;

 private:
  WeightedFan() = default;
  int ambient_rank_ = 0;
  std::vector<QuotientVector> rays_;
  std::vector<Cone> maximal_;                    // sorted by ray list
  std::vector<long long> weights_;               // parallel to maximal_
  std::vector<std::vector<Cone>> cones_by_dim_;  // face closure; [0] = origin
};

struct FanViolation {
  std::string kind;
  std::string detail;
};

struct FanValidation {
  std::vector<FanViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Structural checks: primitive nonzero rays, no duplicate rays or cones,
// simplicial cones, pure dimension, and the fan property (pairwise
// intersections of maximal cones meet along common faces).
FanValidation fan_validate(const WeightedFan& f, long long max_work = 1000000);

bool cone_contains(const WeightedFan& f, const Cone& c,
                   const QuotientVector& v);
bool cone_contains_interior(const WeightedFan& f, const Cone& c,
                            const QuotientVector& v);

// First maximal cone (in the fan's sorted order) containing v, if any.
std::optional<Cone> support_contains(const WeightedFan& f,
                                     const QuotientVector& v);

struct BalancingEntry {
  Cone tau;
  bool balanced = false;
  // Witness when unbalanced: the weighted sum of lattice normal lifts,
  // in truncated coordinates; it lies outside span(tau).
  std::vector<long long> residual;
};

struct BalancingReport {
  std::vector<BalancingEntry> entries;  // one per codimension-1 cone
  bool all_balanced() const {
    for (const auto& e : entries)
      if (!e.balanced) return false;
    return true;
  }
};

// Minkowski-weight balancing at every codimension-1 cone.  The parallel
// kernel and the serial reference must produce identical reports.
BalancingReport check_balancing(const WeightedFan& f);
BalancingReport check_balancing_serial(const WeightedFan& f);

// Basis (as quotient vectors) of the lineality space of the support:
// the largest lattice subgroup L with sigma + L = sigma for all maximal
// sigma.
std::vector<QuotientVector> lineality(const WeightedFan& f);

// Membership of v in the cone generated by possibly dependent generators,
// by searching independent subsets.
bool cone_membership_general(
    const std::vector<std::vector<long long>>& gens,
    const std::vector<long long>& v);

}  // namespace tropfan
