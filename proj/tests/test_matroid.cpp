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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "tropfan/matroid.hpp"

using namespace tropfan;

namespace {

Err code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const TropError& e) {
    return e.code();
  }
  REQUIRE_MESSAGE(false, "expected a TropError");
  return Err::kBadInput;
}

Matroid from_lists(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<SetMask> masks;
  for (const auto& b : bases) masks.push_back(list_to_mask(b, n));
  return Matroid::from_bases(n, std::move(masks));
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  return a.n_elements() == b.n_elements() && a.bases() == b.bases();
}

// Rank straight from the definition, independent of the member function.
int rank_oracle(const Matroid& m, SetMask s) {
  int best = 0;
  for (SetMask b : m.bases()) best = std::max(best, popcount_mask(b & s));
  return best;
}

// Minimal dependent sets by exhaustive subset inspection.
std::vector<SetMask> circuit_oracle(const Matroid& m) {
  const SetMask full = (SetMask(1) << m.n_elements()) - 1;
  std::vector<SetMask> out;
  for (SetMask s = 1; s <= full; ++s) {
    if (rank_oracle(m, s) >= popcount_mask(s)) continue;
    bool minimal = true;
    for (SetMask t = (s - 1) & s; minimal && t > 0; t = (t - 1) & s) {
      if (rank_oracle(m, t) < popcount_mask(t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](SetMask a, SetMask b) {
    if (popcount_mask(a) != popcount_mask(b)) {
      return popcount_mask(a) < popcount_mask(b);
    }
    return mask_lex_less(a, b);
  });
  return out;
}

// Closed sets by the rank definition: adding any outside element must
// increase the rank.
std::set<SetMask> flat_oracle(const Matroid& m) {
  const SetMask full = (SetMask(1) << m.n_elements()) - 1;
  std::set<SetMask> out;
  for (SetMask s = 0; s <= full; ++s) {
    const int r = rank_oracle(m, s);
    bool closed = true;
    for (int e = 0; closed && e < m.n_elements(); ++e) {
      if (s & (SetMask(1) << e)) continue;
      if (rank_oracle(m, s | (SetMask(1) << e)) == r) closed = false;
    }
    if (closed) out.insert(s);
  }
  return out;
}

// Column matrix of the seven nonzero vectors of F_2^3, points labeled by
// the binary expansion of index + 1.
template <typename K, typename Field>
Matrix<K> binary_labels_matrix(const Field& field) {
  Matrix<K> a(3, 7, field(0));
  for (int c = 0; c < 7; ++c) {
    const int label = c + 1;
    for (int r = 0; r < 3; ++r) a.at(r, c) = field((label >> r) & 1);
  }
  return a;
}

}  // namespace

TEST_CASE("basis validation rejects malformed input") {
  CHECK(code_of([] { Matroid::from_bases(3, {}); }) == Err::kEmptyBases);
  CHECK(code_of([] { from_lists(3, {{0, 1}, {2}}); }) ==
        Err::kUnequalCardinality);
  CHECK(code_of([] { from_lists(3, {{0, 3}}); }) == Err::kParameterOutOfRange);
  CHECK(code_of([] { from_lists(0, {{}}); }) == Err::kParameterOutOfRange);
  CHECK(code_of([] { from_lists(17, {{0}}); }) == Err::kParameterOutOfRange);
  CHECK(code_of([] { from_lists(4, {{0, 1}, {2, 3}}); }) ==
        Err::kExchangeAxiomViolation);
  CHECK(code_of([] { from_lists(3, {{0, 1}}); }) == Err::kLoopDetected);
}

TEST_CASE("two overlapping pairs satisfy exchange") {
  const Matroid m = from_lists(3, {{0, 1}, {0, 2}});
  CHECK(m.rank() == 2);
  CHECK(m.bases().size() == 2);
  CHECK(m.is_basis(list_to_mask({0, 1}, 3)));
  CHECK_FALSE(m.is_basis(list_to_mask({1, 2}, 3)));
}

TEST_CASE("duplicate bases are merged") {
  const Matroid m = from_lists(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
  CHECK(m.bases().size() == 3);
}

TEST_CASE("rank and closure") {
  const Matroid u = uniform_matroid(2, 3);
  CHECK(u.rank_of(0) == 0);
  CHECK(u.rank_of(list_to_mask({0}, 3)) == 1);
  CHECK(u.rank_of(list_to_mask({0, 1}, 3)) == 2);
  CHECK(u.rank_of(u.full_mask()) == 2);
  CHECK(u.closure_of(list_to_mask({0}, 3)).elements == list_to_mask({0}, 3));
  CHECK(u.closure_of(list_to_mask({0, 1}, 3)).elements == u.full_mask());

  const Matroid f = fano();
  CHECK(f.closure_of(list_to_mask({0, 1}, 7)).elements ==
        list_to_mask({0, 1, 2}, 7));
  CHECK(f.closure_of(0).elements == 0);
  CHECK(f.closure_of(0).rank == 0);

  for (const ZooEntry& e : standard_zoo()) {
    const SetMask full = e.matroid.full_mask();
    for (SetMask s = 0; s <= full; s += 7) {
      CHECK(e.matroid.rank_of(s) == rank_oracle(e.matroid, s));
    }
  }
}

TEST_CASE("flat lattice matches the closed-set oracle") {
  for (const ZooEntry& e : standard_zoo()) {
    const FlatLattice fl = flats(e.matroid);
    REQUIRE(static_cast<int>(fl.by_rank.size()) == e.matroid.rank() + 1);
    std::set<SetMask> found;
    for (int r = 0; r < static_cast<int>(fl.by_rank.size()); ++r) {
      for (const Flat& f : fl.by_rank[r]) {
        CHECK(f.rank == r);
        CHECK(e.matroid.rank_of(f.elements) == r);
        found.insert(f.elements);
      }
      for (size_t i = 0; i + 1 < fl.by_rank[r].size(); ++i) {
        CHECK(mask_lex_less(fl.by_rank[r][i].elements,
                            fl.by_rank[r][i + 1].elements));
      }
    }
    CHECK(found == flat_oracle(e.matroid));
  }
}

TEST_CASE("Fano flats are the points and lines") {
  const FlatLattice fl = flats(fano());
  REQUIRE(fl.by_rank.size() == 4);
  CHECK(fl.by_rank[0].size() == 1);
  CHECK(fl.by_rank[1].size() == 7);
  CHECK(fl.by_rank[2].size() == 7);
  CHECK(fl.by_rank[3].size() == 1);
  std::set<SetMask> lines;
  for (const auto& line : kFanoLines) {
    lines.insert(list_to_mask({line[0], line[1], line[2]}, 7));
  }
  for (const Flat& f : fl.by_rank[2]) CHECK(lines.count(f.elements) == 1);
}

TEST_CASE("circuits match the minimal-dependent-set oracle") {
  for (const ZooEntry& e : standard_zoo()) {
    CHECK(circuits(e.matroid) == circuit_oracle(e.matroid));
  }
  CHECK(circuits(uniform_matroid(2, 3)) ==
        std::vector<SetMask>{list_to_mask({0, 1, 2}, 3)});
  CHECK(circuits(boolean_matroid(4)).empty());
  CHECK(circuits(uniform_matroid(2, 4)).size() == 4);
  CHECK(circuits(fano()).size() == 14);
}

TEST_CASE("connected components") {
  CHECK(connected_components(fano()).count() == 1);
  CHECK(connected_components(boolean_matroid(3)).count() == 3);
  const ComponentPartition two = connected_components(
      direct_sum(uniform_matroid(2, 3), uniform_matroid(2, 3)));
  REQUIRE(two.count() == 2);
  CHECK(two.blocks[0] == list_to_mask({0, 1, 2}, 6));
  CHECK(two.blocks[1] == list_to_mask({3, 4, 5}, 6));
}

TEST_CASE("standard constructors") {
  CHECK(uniform_matroid(2, 4).bases().size() == 6);
  CHECK(uniform_matroid(3, 6).bases().size() == 20);
  CHECK(boolean_matroid(4).bases().size() == 1);
  CHECK(fano().bases().size() == 28);
  CHECK(non_fano().bases().size() == 29);
  CHECK(code_of([] { uniform_matroid(0, 3); }) == Err::kParameterOutOfRange);
  CHECK(code_of([] { uniform_matroid(4, 3); }) == Err::kParameterOutOfRange);
  CHECK(code_of([] { boolean_matroid(17); }) == Err::kParameterOutOfRange);

  // The non-Fano matroid relaxes exactly one line.
  std::vector<SetMask> fano_only;
  const auto fb = fano().bases();
  const auto nb = non_fano().bases();
  std::set_difference(nb.begin(), nb.end(), fb.begin(), fb.end(),
                      std::back_inserter(fano_only),
                      [](SetMask a, SetMask b) { return mask_lex_less(a, b); });
  REQUIRE(fano_only.size() == 1);
  CHECK(fano_only[0] == list_to_mask({2, 4, 5}, 7));
}

TEST_CASE("direct sum") {
  const Matroid s = direct_sum(uniform_matroid(2, 3), uniform_matroid(1, 2));
  CHECK(s.n_elements() == 5);
  CHECK(s.rank() == 3);
  CHECK(s.bases().size() == 6);
  CHECK(s.is_basis(list_to_mask({0, 1, 3}, 5)));
  CHECK_FALSE(s.is_basis(list_to_mask({0, 1, 2}, 5)));
}

TEST_CASE("column matroids of the binary labels matrix") {
  PrimeField f2(2), f3(3);
  const Matroid over_f2 = column_matroid(binary_labels_matrix<Fp>(f2));
  CHECK(same_matroid(over_f2, fano()));

  const Matroid over_f3 = column_matroid(binary_labels_matrix<Fp>(f3));
  CHECK(same_matroid(over_f3, non_fano()));

  const Matroid over_q = column_matroid(
      binary_labels_matrix<Rat>([](long long v) { return rat_of(v); }));
  CHECK(same_matroid(over_q, non_fano()));
}

TEST_CASE("column matroid input validation") {
  PrimeField f2(2);
  MatrixFp zero_col(2, 3, f2(0));
  zero_col.at(0, 0) = f2(1);
  zero_col.at(1, 1) = f2(1);
  CHECK(code_of([&] { column_matroid(zero_col); }) == Err::kLoopColumn);

  MatrixFp low_rank(2, 3, f2(0));
  for (int j = 0; j < 3; ++j) low_rank.at(0, j) = f2(1);
  CHECK(code_of([&] { column_matroid(low_rank); }) == Err::kNotFullRank);
}

TEST_CASE("mask helpers") {
  CHECK(popcount_mask(0b1011) == 3);
  CHECK(mask_to_list(0b1011) == std::vector<int>{0, 1, 3});
  CHECK(list_to_mask({3, 0, 1}, 4) == 0b1011);
  CHECK(code_of([] { list_to_mask({4}, 4); }) == Err::kParameterOutOfRange);

  // Ascending-list order: {0,1,2} < {0,1,3} < {0,2,3} < {1,2,3}.
  CHECK(mask_lex_less(0b0111, 0b1011));
  CHECK(mask_lex_less(0b1011, 0b1101));
  CHECK(mask_lex_less(0b1101, 0b1110));
  CHECK_FALSE(mask_lex_less(0b1110, 0b0111));
}

TEST_CASE("zoo names and shapes") {
  const auto zoo = standard_zoo();
  REQUIRE(zoo.size() == 7);
  CHECK(zoo[0].name == "u23");
  CHECK(zoo[1].name == "u24");
  CHECK(zoo[2].name == "boolean3");
  CHECK(zoo[3].name == "boolean4");
  CHECK(zoo[4].name == "fano");
  CHECK(zoo[5].name == "non_fano");
  CHECK(zoo[6].name == "u23_plus_u23");
  for (const ZooEntry& e : zoo) {
    CHECK(e.matroid.rank() >= 2);
    CHECK(e.matroid.n_elements() <= 8);
  }
}
