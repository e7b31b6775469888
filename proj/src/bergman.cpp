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

#include "tropfan/bergman.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropfan {

BergmanFan bergman_fan(const Matroid& m) {
  if (m.rank() < 2) {
    fail(Err::kRankZero, "matroid fan needs rank at least 2");
  }
  const int d = m.rank() - 1;  // fan dimension
  FlatLattice lattice = flats(m);
  std::vector<SetMask> flat_of_ray;
  std::map<SetMask, int> ray_of_flat;
  for (int r = 1; r <= d; ++r) {
    for (const Flat& f : lattice.by_rank[r]) {
      ray_of_flat[f.elements] = static_cast<int>(flat_of_ray.size());
      flat_of_ray.push_back(f.elements);
    }
  }
  std::vector<QuotientVector> rays;
  rays.reserve(flat_of_ray.size());
  for (SetMask f : flat_of_ray) {
    rays.push_back(QuotientVector::indicator(f, m.n_elements()));
  }
  // Full flags F_1 < ... < F_d, one flat per rank.
  std::vector<Cone> maximal;
  std::vector<int> chain;
  std::function<void(int, SetMask)> extend = [&](int rank, SetMask below) {
    if (rank > d) {
      maximal.push_back(Cone{chain});
      return;
    }
    for (const Flat& f : lattice.by_rank[rank]) {
      if ((f.elements & below) != below) continue;
      chain.push_back(ray_of_flat[f.elements]);
      extend(rank + 1, f.elements);
      chain.pop_back();
    }
  };
  extend(1, 0);
  std::vector<long long> weights(maximal.size(), 1);
  return BergmanFan{
      WeightedFan::from_maximal(m.n_elements() - 1, std::move(rays),
                                std::move(maximal), std::move(weights)),
      std::move(flat_of_ray)};
}

bool circuit_membership(const std::vector<SetMask>& circuit_list,
                        const QuotientVector& v) {
  for (SetMask c : circuit_list) {
    long long min_val = 0;
    bool first = true;
    int hits = 0;
    for (int i : mask_to_list(c)) {
      long long x = v.c[i];
      if (first || x < min_val) {
        min_val = x;
        hits = 1;
        first = false;
      } else if (x == min_val) {
        ++hits;
      }
    }
    if (hits < 2) return false;
  }
  return true;
}

bool circuit_membership(const Matroid& m, const QuotientVector& v) {
  if (v.length() != m.n_elements()) {
    fail(Err::kDimensionMismatch, "vector length differs from ground set");
  }
  return circuit_membership(circuits(m), v);
}

LinealityLattice component_lattice(const Matroid& m) {
  ComponentPartition parts = connected_components(m);
  LinealityLattice out;
  for (SetMask b : parts.blocks) {
    out.component_vectors.push_back(
        QuotientVector::indicator(b, m.n_elements()));
  }
  // The component indicators sum to e_E = 0 in the quotient.
  std::vector<long long> total(m.n_elements(), 0);
  for (const auto& q : out.component_vectors) {
    for (int i = 0; i < q.length(); ++i) total[i] += q.c[i];
  }
  if (!QuotientVector::canonical(total).is_zero()) {
    fail(Err::kBadInput, "component vectors do not sum to the relation");
  }
  for (size_t i = 0; i + 1 < out.component_vectors.size(); ++i) {
    out.basis.push_back(out.component_vectors[i]);
  }
  return out;
}

namespace {

// Projection along the basis b: keep the coordinates at b's elements, then
// canonicalize in the small quotient.  Indicator rays project to indicator
// vectors again.
std::vector<long long> project_indicator(SetMask flat,
                                         const std::vector<int>& b) {
  const int k = static_cast<int>(b.size());
  std::vector<long long> raw(k, 0);
  for (int j = 0; j < k; ++j) {
    if (flat & (SetMask(1) << b[j])) raw[j] = 1;
  }
  return QuotientVector::canonical(std::move(raw)).truncated();
}

DegreeOneReport degree_one_impl(const Matroid& m, SetMask basis,
                                bool parallel) {
  if (popcount_mask(basis) != m.rank() || !m.is_basis(basis)) {
    fail(Err::kNotABasis, "subset is not a basis of the matroid");
  }
  const int d = m.rank() - 1;
  BergmanFan bf = bergman_fan(m);
  std::map<SetMask, int> ray_of_flat;
  for (size_t i = 0; i < bf.flat_of_ray.size(); ++i) {
    ray_of_flat[bf.flat_of_ray[i]] = static_cast<int>(i);
  }
  const std::vector<int> b = mask_to_list(basis);

  DegreeOneReport report;
  report.basis_order = b;
  for (int e = 0; e < m.n_elements(); ++e) {
    if (!(basis & (SetMask(1) << e))) report.basis_order.push_back(e);
  }

  // Projected generators of every maximal cone of the matroid fan.
  const auto& maximal = bf.fan.maximal();
  std::vector<std::vector<std::vector<long long>>> projected(maximal.size());
  for (size_t s = 0; s < maximal.size(); ++s) {
    for (int ri : maximal[s].rays) {
      projected[s].push_back(project_indicator(bf.flat_of_ray[ri], b));
    }
  }

  // Maximal Boolean flags on b, one per permutation.
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  report.entries.resize(perms.size());

  auto run_one = [&](int pi) {
    const auto& perm = perms[pi];
    DegreeOneEntry entry;
    std::vector<long long> witness(d, 0);
    SetMask s = 0;
    SetMask sub_basis = 0;
    Cone predicted;
    for (int i = 0; i < d; ++i) {
      s |= SetMask(1) << perm[i];
      sub_basis |= SetMask(1) << b[perm[i]];
      entry.boolean_flag.push_back(static_cast<int>(s));
      auto gen = QuotientVector::indicator(s, d + 1).truncated();
      for (int t = 0; t < d; ++t) witness[t] += gen[t];
      Flat f = m.closure_of(sub_basis);
      predicted.rays.push_back(ray_of_flat.at(f.elements));
    }
    std::sort(predicted.rays.begin(), predicted.rays.end());
    entry.predicted = predicted;
    int container = -1;
    for (size_t t = 0; t < maximal.size(); ++t) {
      if (cone_membership_general(projected[t], witness)) {
        ++entry.preimages;
        container = static_cast<int>(t);
      }
    }
    entry.unique = (entry.preimages == 1 && container >= 0 &&
                    maximal[container] == predicted);
    // Unimodularity of the projection on the predicted cone.
    int pred_index = -1;
    for (size_t t = 0; t < maximal.size(); ++t) {
      if (maximal[t] == predicted) {
        pred_index = static_cast<int>(t);
        break;
      }
    }
    if (pred_index >= 0) {
      entry.unimodular = (lattice_index(projected[pred_index], d) == 1);
    }
    report.entries[pi] = std::move(entry);
  };

  const int total = static_cast<int>(perms.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int pi = 0; pi < total; ++pi) run_one(pi);
  } else {
    for (int pi = 0; pi < total; ++pi) run_one(pi);
  }

  report.ok = true;
  for (const auto& e : report.entries) {
    if (!e.unique || !e.unimodular) report.ok = false;
  }
  return report;
}

}  // namespace

DegreeOneReport verify_degree_one(const Matroid& m, SetMask basis) {
  return degree_one_impl(m, basis, true);
}

DegreeOneReport verify_degree_one_serial(const Matroid& m, SetMask basis) {
  return degree_one_impl(m, basis, false);
}

}  // namespace tropfan
