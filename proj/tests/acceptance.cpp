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

// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line
// with its runtime and has a pinned time limit; the exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <vector>

#include "tropfan/bergman.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/realization.hpp"

using namespace tropfan;

namespace {

int g_failures = 0;

void criterion(const char* name, double limit_s,
               const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  const char* what = nullptr;
  try {
    ok = body();
  } catch (const std::exception& e) {
    what = e.what();
  }
  const double s = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  if (s > limit_s) ok = false;
  std::printf("[%s] %-38s %7.2fs  (limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
              name, s, limit_s, what ? "  " : "", what ? what : "");
  if (!ok) ++g_failures;
}

QuotientVector random_vector(int length, std::mt19937& rng) {
  std::uniform_int_distribution<long long> coord(-5, 5);
  std::vector<long long> raw(length);
  for (auto& x : raw) x = coord(rng);
  return QuotientVector::canonical(std::move(raw));
}

bool fano_fan_shape() {
  const BergmanFan b = bergman_fan(fano());
  return b.fan.ambient_rank() == 6 && b.fan.dim() == 2 &&
         b.fan.rays().size() == 14 && b.fan.maximal().size() == 21;
}

bool balancing_and_sensitivity() {
  for (const ZooEntry& e : standard_zoo()) {
    const WeightedFan fan = bergman_fan(e.matroid).fan;
    if (!check_balancing(fan).all_balanced()) return false;
    for (size_t i = 0; i < fan.weights().size(); ++i) {
      std::vector<long long> tweaked = fan.weights();
      tweaked[i] = 2;
      const WeightedFan mutant = WeightedFan::from_maximal(
          fan.ambient_rank(), fan.rays(), fan.maximal(), tweaked);
      if (check_balancing(mutant).all_balanced()) return false;
    }
  }
  return true;
}

bool realizability_dichotomy() {
  const Matroid f = fano();
  const Matroid nf = non_fano();
  return !search_realizations(f, 2).empty() &&
         search_realizations(f, 3).empty() &&
         search_realizations(f, 5).empty() &&
         search_realizations(nf, 2).empty() &&
         !search_realizations(nf, 3).empty();
}

bool torsor_point_counts() {
  const unsigned long long u23_expect[] = {1, 4, 16};
  const long long u23_q[] = {2, 3, 5};
  for (int i = 0; i < 3; ++i) {
    const TorsorCheck t = verify_torsor_count(uniform_matroid(2, 3), u23_q[i]);
    if (!t.ok || t.subspace_count != u23_expect[i]) return false;
  }
  const TorsorCheck u24q3 = verify_torsor_count(uniform_matroid(2, 4), 3);
  if (!u24q3.ok || u24q3.subspace_count != 8) return false;
  const TorsorCheck u24q5 = verify_torsor_count(uniform_matroid(2, 4), 5);
  if (!u24q5.ok || u24q5.subspace_count != 192) return false;
  const TorsorCheck fano2 = verify_torsor_count(fano(), 2);
  return fano2.ok && fano2.subspace_count == 1;
}

bool degree_one_everywhere() {
  const Matroid f = fano();
  for (SetMask b : f.bases()) {
    if (!verify_degree_one(f, b).ok) return false;
  }
  const Matroid u24 = uniform_matroid(2, 4);
  for (SetMask b : u24.bases()) {
    if (!verify_degree_one(u24, b).ok) return false;
  }
  return true;
}

bool membership_equivalence() {
  std::mt19937 rng(20260814);
  for (const ZooEntry& e : standard_zoo()) {
    const WeightedFan fan = bergman_fan(e.matroid).fan;
    for (int trial = 0; trial < 200; ++trial) {
      const QuotientVector v = random_vector(e.matroid.n_elements(), rng);
      if (circuit_membership(e.matroid, v) !=
          support_contains(fan, v).has_value()) {
        return false;
      }
    }
  }
  return true;
}

bool lineality_matches_components() {
  for (const ZooEntry& e : standard_zoo()) {
    const WeightedFan fan = bergman_fan(e.matroid).fan;
    const size_t expect = connected_components(e.matroid).count() - 1;
    if (lineality(fan).size() != expect) return false;
    if (component_lattice(e.matroid).basis.size() != expect) return false;
  }
  return lineality(bergman_fan(fano()).fan).empty() &&
         lineality(bergman_fan(direct_sum(uniform_matroid(2, 3),
                                          uniform_matroid(2, 3)))
                       .fan)
                 .size() == 1 &&
         lineality(bergman_fan(boolean_matroid(3)).fan).size() == 2;
}

bool boolean_fan_cover() {
  std::mt19937 rng(7);
  for (int d : {2, 3}) {
    const WeightedFan fan = bergman_fan(boolean_matroid(d + 1)).fan;
    long long expect = 1;
    for (int k = 2; k <= d + 1; ++k) expect *= k;
    if (static_cast<long long>(fan.maximal().size()) != expect) return false;
    for (int trial = 0; trial < 500; ++trial) {
      const QuotientVector v = random_vector(d + 1, rng);
      int containing = 0;
      int interior = 0;
      for (const Cone& c : fan.maximal()) {
        if (cone_contains(fan, c, v)) ++containing;
        if (cone_contains_interior(fan, c, v)) ++interior;
      }
      // The Boolean fan is complete: every point lies in some maximal cone,
      // in the interior of at most one, and on a boundary shared by at
      // least two otherwise.
      if (containing < 1 || interior > 1) return false;
      if (interior == 1 && containing != 1) return false;
      if (interior == 0 && containing < 2) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("fano fan shape", 1, fano_fan_shape);
  criterion("balancing and weight sensitivity", 10, balancing_and_sensitivity);
  criterion("realizability dichotomy", 60, realizability_dichotomy);
  criterion("torsor point counts", 300, torsor_point_counts);
  criterion("degree-one projections", 60, degree_one_everywhere);
  criterion("membership criterion equivalence", 30, membership_equivalence);
  criterion("lineality matches components", 10, lineality_matches_components);
  criterion("boolean fan cover", 10, boolean_fan_cover);
  return g_failures;
}
