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
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "tropfan/matroid.hpp"
#include "tropfan/realization.hpp"

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

// Column c is the base-2 expansion of c+1, least significant bit in row 0.
MatrixFp binary_labels(const PrimeField& field) {
  MatrixFp a(3, 7, field(0));
  for (int c = 0; c < 7; ++c) {
    for (int r = 0; r < 3; ++r) a.at(r, c) = field(((c + 1) >> r) & 1);
  }
  return a;
}

MatrixQ u24_matrix_q() {
  const long long e[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 2}};
  MatrixQ a(2, 4, Rat(0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) a.at(i, j) = rat_of(e[i][j]);
  }
  return a;
}

// A random invertible row operation sequence followed by column scalings.
MatrixFp scrambled(const MatrixFp& a, std::mt19937& rng) {
  const PrimeField field(a.at(0, 0).modulus());
  const long long p = field.modulus();
  std::uniform_int_distribution<long long> unit(1, p - 1);
  std::uniform_int_distribution<long long> any(0, p - 1);
  std::uniform_int_distribution<int> row(0, a.rows() - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  MatrixFp b = a;
  for (int step = 0; step < 8; ++step) {
    const int r1 = row(rng);
    int r2 = row(rng);
    const Fp scale = field(unit(rng));
    const Fp shear = field(any(rng));
    switch (kind(rng)) {
      case 0:
        for (int j = 0; j < b.cols(); ++j) {
          b.at(r1, j) = b.at(r1, j) * scale;
        }
        break;
      case 1:
        while (r2 == r1) r2 = row(rng);
        for (int j = 0; j < b.cols(); ++j) {
          b.at(r2, j) = b.at(r2, j) + shear * b.at(r1, j);
        }
        break;
      default:
        for (int j = 0; j < b.cols(); ++j) std::swap(b.at(r1, j), b.at(r2, j));
        break;
    }
  }
  for (int j = 0; j < b.cols(); ++j) {
    const Fp s = field(unit(rng));
    for (int i = 0; i < b.rows(); ++i) b.at(i, j) = b.at(i, j) * s;
  }
  return b;
}

const std::vector<long long> kBinaryLabelEntries = {
    1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1};

}  // namespace

TEST_CASE("gamma points of the binary labels matrix") {
  const Matroid f = fano();
  const Matroid nf = non_fano();
  const SetMask relaxed = list_to_mask({2, 4, 5}, 7);

  const GammaCheck over_f2 = is_gamma_point(f, binary_labels(PrimeField(2)));
  CHECK(over_f2.ok);

  // Over F_3 the relaxed line gains a nonzero minor, so the matrix is a
  // point of the non-Fano stratum instead.
  const MatrixFp over3 = binary_labels(PrimeField(3));
  const GammaCheck vs_fano = is_gamma_point(f, over3);
  CHECK_FALSE(vs_fano.ok);
  CHECK(vs_fano.first_failure == relaxed);
  CHECK_FALSE(vs_fano.failure_is_basis);
  CHECK(is_gamma_point(nf, over3).ok);

  const GammaCheck vs_nf = is_gamma_point(nf, binary_labels(PrimeField(2)));
  CHECK_FALSE(vs_nf.ok);
  CHECK(vs_nf.first_failure == relaxed);
  CHECK(vs_nf.failure_is_basis);

  CHECK(is_gamma_point(uniform_matroid(2, 4), u24_matrix_q()).ok);

  CHECK(code_of([&] { is_gamma_point(f, u24_matrix_q()); }) ==
        Err::kDimensionMismatch);
}

TEST_CASE("realizability dichotomy across characteristics") {
  const Matroid f = fano();
  const Matroid nf = non_fano();

  const auto fano2 = search_realizations(f, 2);
  REQUIRE(fano2.size() == 1);
  CHECK(fano2[0].entries == kBinaryLabelEntries);
  CHECK(fano2[0].gauge_basis == list_to_mask({0, 1, 3}, 7));
  CHECK(search_realizations(f, 3).empty());
  CHECK(search_realizations(f, 5).empty());

  CHECK(search_realizations(nf, 2).empty());
  const auto nf3 = search_realizations(nf, 3);
  REQUIRE(nf3.size() == 1);
  CHECK(nf3[0].entries == kBinaryLabelEntries);

  // kFirst stops at the first class of the full enumeration.
  const auto first = search_realizations(uniform_matroid(2, 4), 5,
                                         SearchMode::kFirst);
  REQUIRE(first.size() == 1);
  CHECK(first[0] == search_realizations(uniform_matroid(2, 4), 5)[0]);

  for (long long p : {2, 3, 5}) {
    CHECK(search_realizations_serial(f, p) == search_realizations(f, p));
    CHECK(search_realizations_serial(nf, p) == search_realizations(nf, p));
  }
}

TEST_CASE("gauge classes of U(2,4) over F_5") {
  const Matroid m = uniform_matroid(2, 4);
  const auto classes = search_realizations(m, 5);
  REQUIRE(classes.size() == 3);
  for (long long b : {2, 3, 4}) {
    const GaugeClass& g = classes[b - 2];
    CHECK(g.prime == 5);
    CHECK(g.rows == 2);
    CHECK(g.cols == 4);
    CHECK(g.gauge_basis == list_to_mask({0, 1}, 4));
    CHECK(g.entries == std::vector<long long>{1, 0, 1, 1, 0, 1, 1, b});
  }
}

TEST_CASE("canonical class is a gauge invariant") {
  std::mt19937 rng(20260814);
  const Matroid u24 = uniform_matroid(2, 4);
  const Matroid nf = non_fano();
  for (const GaugeClass& cls : search_realizations(u24, 5)) {
    CHECK(canonical_class_of(u24, cls.matrix()) == cls);
    for (int trial = 0; trial < 50; ++trial) {
      CHECK(canonical_class_of(u24, scrambled(cls.matrix(), rng)) == cls);
    }
  }
  const GaugeClass nf3 = search_realizations(nf, 3)[0];
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(canonical_class_of(nf, scrambled(nf3.matrix(), rng)) == nf3);
  }

  // Matrices outside the stratum are rejected.
  const PrimeField f5(5);
  MatrixFp bad(2, 4, f5(0));
  const long long e[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 1}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) bad.at(i, j) = f5(e[i][j]);
  }
  CHECK(code_of([&] { canonical_class_of(u24, bad); }) == Err::kBadInput);
}

TEST_CASE("exhaustive Fano census over F_2") {
  const Matroid m = fano();
  const GaugeClass cls = search_realizations(m, 2)[0];
  const PrimeField f2(2);

  // Independent census: columns range over the seven nonzero vectors of
  // F_2^3 encoded as 3-bit labels; a triple of labels is independent
  // exactly when the labels are distinct and do not xor to zero.
  std::vector<std::array<int, 3>> triples;
  std::vector<char> want;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      for (int k = j + 1; k < 7; ++k) {
        triples.push_back({i, j, k});
        want.push_back(m.is_basis(list_to_mask({i, j, k}, 7)) ? 1 : 0);
      }
    }
  }
  long long census = 0;
  std::vector<int> col(7, 1);
  while (true) {
    bool match = true;
    for (size_t t = 0; t < triples.size() && match; ++t) {
      const int a = col[triples[t][0]];
      const int b = col[triples[t][1]];
      const int c = col[triples[t][2]];
      const bool indep = a != b && a != c && b != c && (a ^ b ^ c) != 0;
      match = (indep == (want[t] != 0));
    }
    if (match) {
      ++census;
      if (census % 16 == 1) {
        MatrixFp a(3, 7, f2(0));
        for (int c = 0; c < 7; ++c) {
          for (int r = 0; r < 3; ++r) a.at(r, c) = f2((col[c] >> r) & 1);
        }
        CHECK(is_gamma_point(m, a).ok);
        CHECK(canonical_class_of(m, a) == cls);
      }
    }
    int i = 0;
    while (i < 7 && col[i] == 7) col[i++] = 1;
    if (i == 7) break;
    ++col[i];
  }
  // One subspace times |GL_3(F_2)| = 168 matrices.
  CHECK(census == 168);
  CHECK(count_tropical_realizations(m, 2) == 1);
}

TEST_CASE("exhaustive U(2,4) census over F_5") {
  const Matroid m = uniform_matroid(2, 4);
  const auto classes = search_realizations(m, 5);
  REQUIRE(classes.size() == 3);
  const PrimeField f5(5);

  std::map<GaugeClass, long long> hits;
  std::vector<long long> e(8, 0);
  auto minor = [&](int c1, int c2) {
    return (e[c1] * e[4 + c2] - e[c2] * e[4 + c1]) % 5 != 0;
  };
  long long census = 0;
  while (true) {
    bool gamma = true;
    for (int c1 = 0; c1 < 4 && gamma; ++c1) {
      for (int c2 = c1 + 1; c2 < 4 && gamma; ++c2) gamma = minor(c1, c2);
    }
    if (gamma) {
      ++census;
      MatrixFp a(2, 4, f5(0));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 4; ++j) a.at(i, j) = f5(e[4 * i + j]);
      }
      ++hits[canonical_class_of(m, a)];
    }
    int i = 0;
    while (i < 8 && e[i] == 4) e[i++] = 0;
    if (i == 8) break;
    ++e[i];
  }
  // 192 subspaces times |GL_2(F_5)| = 480.
  CHECK(census == 92160);
  REQUIRE(hits.size() == 3);
  for (const GaugeClass& cls : classes) {
    REQUIRE(hits.count(cls) == 1);
    // The gauge group acts freely, so the fibers have equal size.
    CHECK(hits[cls] == 92160 / 3);
  }
}

TEST_CASE("subspace counts match closed forms") {
  const Matroid u23 = uniform_matroid(2, 3);
  for (long long q : {2, 3, 5, 7, 11}) {
    CHECK(count_tropical_realizations(u23, q) ==
          static_cast<unsigned long long>((q - 1) * (q - 1)));
  }
  const Matroid u24 = uniform_matroid(2, 4);
  for (long long q : {3, 5, 7}) {
    CHECK(count_tropical_realizations(u24, q) ==
          static_cast<unsigned long long>((q - 2) * (q - 1) * (q - 1) *
                                          (q - 1)));
  }
  CHECK(count_tropical_realizations(boolean_matroid(3), 2) == 1);
  CHECK(count_tropical_realizations(boolean_matroid(3), 5) == 1);
  CHECK(count_tropical_realizations(fano(), 2) == 1);
  CHECK(count_tropical_realizations(fano(), 3) == 0);
  CHECK(count_tropical_realizations(non_fano(), 2) == 0);
  CHECK(count_tropical_realizations(non_fano(), 3) == 64);

  CHECK(count_tropical_realizations_serial(u24, 5) == 192);
  CHECK(count_tropical_realizations_serial(fano(), 2) == 1);
}

TEST_CASE("torsor identity, both sides computed independently") {
  const Matroid u23 = uniform_matroid(2, 3);
  for (long long q : {2, 3, 5}) {
    const TorsorCheck t = verify_torsor_count(u23, q);
    CHECK(t.ok);
    CHECK(t.class_count == 1);
    CHECK(t.torus_rank == 2);
    CHECK(t.subspace_count ==
          static_cast<unsigned long long>((q - 1) * (q - 1)));
  }

  const TorsorCheck u24q3 = verify_torsor_count(uniform_matroid(2, 4), 3);
  CHECK(u24q3.ok);
  CHECK(u24q3.subspace_count == 8);
  CHECK(u24q3.class_count == 1);
  CHECK(u24q3.torus_rank == 3);

  const TorsorCheck u24q5 = verify_torsor_count(uniform_matroid(2, 4), 5);
  CHECK(u24q5.ok);
  CHECK(u24q5.subspace_count == 192);
  CHECK(u24q5.class_count == 3);
  CHECK(u24q5.predicted == int_of(192));

  const TorsorCheck fano2 = verify_torsor_count(fano(), 2);
  CHECK(fano2.ok);
  CHECK(fano2.subspace_count == 1);
  CHECK(fano2.class_count == 1);
  CHECK(fano2.torus_rank == 6);

  const TorsorCheck nf3 = verify_torsor_count(non_fano(), 3);
  CHECK(nf3.ok);
  CHECK(nf3.subspace_count == 64);
  CHECK(nf3.class_count == 1);

  const TorsorCheck sum2 = verify_torsor_count(
      direct_sum(uniform_matroid(2, 3), uniform_matroid(2, 3)), 2);
  CHECK(sum2.ok);
  CHECK(sum2.torus_rank == 4);
}

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(3, 2, 2) == int_of(7));
  CHECK(gaussian_binomial(4, 2, 3) == int_of(130));
  CHECK(gaussian_binomial(7, 3, 2) == int_of(11811));
  CHECK(gaussian_binomial(5, 0, 7) == int_of(1));
  CHECK(gaussian_binomial(5, 5, 7) == int_of(1));
  CHECK(gaussian_binomial(2, 1, 9) == int_of(10));
  CHECK(gaussian_binomial(5, 2, 3) == gaussian_binomial(5, 3, 3));
}

TEST_CASE("search and enumeration guards") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(code_of([&] { search_realizations(u23, 17); }) ==
        Err::kParameterOutOfRange);
  CHECK(code_of([&] { search_realizations(u23, 4); }) ==
        Err::kParameterOutOfRange);
  CHECK(search_realizations(u23, 13).size() == 1);

  CHECK(code_of([&] {
          search_realizations(fano(), 5, SearchMode::kAllClasses, 10);
        }) == Err::kSearchTooLarge);
  CHECK(code_of([&] { count_tropical_realizations(fano(), 2, 10); }) ==
        Err::kEnumerationTooLarge);
  CHECK(code_of([&] { count_tropical_realizations(u23, 4); }) ==
        Err::kParameterOutOfRange);
}

TEST_CASE("hyperplane arrangement cross-check") {
  const Matroid f = fano();
  const ArrangementCheck good = arrangement_check(binary_labels(PrimeField(2)), f);
  CHECK(good.ok);
  CHECK(good.samples == 128);
  CHECK(good.mismatches == 0);

  const ArrangementCheck off = arrangement_check(binary_labels(PrimeField(3)), f);
  CHECK_FALSE(off.ok);
  CHECK(off.mismatches > 0);

  const ArrangementCheck rat = arrangement_check(u24_matrix_q(),
                                                 uniform_matroid(2, 4));
  CHECK(rat.ok);
  CHECK(rat.samples == 16);

  MatrixQ flat(2, 4, Rat(0));
  for (int j = 0; j < 4; ++j) flat.at(0, j) = rat_of(j + 1);
  CHECK(code_of([&] { arrangement_check(flat, uniform_matroid(2, 4)); }) ==
        Err::kNotFullRank);
  CHECK(code_of([&] { arrangement_check(u24_matrix_q(), f); }) ==
        Err::kDimensionMismatch);
}
