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

// Realization spaces of matroids over prime fields: membership tests,
// gauge-fixed search, subspace counting, and the torsor identity
//   #{tropical realizations over F_q} = #gauge classes * (q-1)^(#M - c(M)).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropfan/exactalg.hpp"
#include "tropfan/matroid.hpp"

namespace tropfan {

inline constexpr long long kDefaultMaxSearch = 100000000;     // DFS leaves
inline constexpr long long kDefaultMaxEnumeration = 10000000;  // subspaces

struct GammaCheck {
  bool ok = false;
  // First subset (in ascending-list order) whose minor vanishes where a
  // basis is required, or is nonzero where a nonbasis is required.
  SetMask first_failure = 0;
  bool failure_is_basis = false;  // true: basis with zero minor
};

// Does the matrix realize the matroid, i.e. is the column matroid of A
// exactly M?  Requires A.rows == rank, A.cols == n_elements.
template <typename K>
GammaCheck is_gamma_point(const Matroid& m, const Matrix<K>& a);

struct GaugeClass {
  long long prime = 0;
  int rows = 0;
  int cols = 0;
  SetMask gauge_basis = 0;          // lex-least basis, pinned to the identity
  std::vector<long long> entries;   // row-major canonical representative

  MatrixFp matrix() const;
  bool operator<(const GaugeClass& o) const { return entries < o.entries; }
  bool operator==(const GaugeClass& o) const {
    return prime == o.prime && rows == o.rows && cols == o.cols &&
           gauge_basis == o.gauge_basis && entries == o.entries;
  }
};

enum class SearchMode { kFirst, kAllClasses };

// Gauge-fixed search for realizations over F_p (p <= 13): the lex-least
// basis is pinned to the identity, the remaining columns run over
// projective representatives (first nonzero entry 1), and leaves are
// reduced modulo the residual torus to canonical class representatives.
// kFirst stops at one class.  Throws SearchTooLarge when the projective
// assignment space exceeds max_work.
std::vector<GaugeClass> search_realizations(
    const Matroid& m, long long p, SearchMode mode = SearchMode::kAllClasses,
    long long max_work = kDefaultMaxSearch);
std::vector<GaugeClass> search_realizations_serial(
    const Matroid& m, long long p, SearchMode mode = SearchMode::kAllClasses,
    long long max_work = kDefaultMaxSearch);

// Canonical torus class of an arbitrary realization matrix of M: the
// lex-least basis is gauge-fixed to the identity by a row operation, then
// the lexicographically least grid over the residual row torus (with
// column leads renormalized to 1) is taken.  Invariant under row
// operations and column scalings; agrees with search_realizations output.
// Throws BadInput when the matrix does not realize M.
GaugeClass canonical_class_of(const Matroid& m, const MatrixFp& a);

// Number of (d+1)-dimensional subspaces of F_q^(n+1), i.e. of row spaces of
// RREF matrices, whose column matroid is exactly M.  Throws
// EnumerationTooLarge when the RREF enumeration exceeds max_work.
unsigned long long count_tropical_realizations(
    const Matroid& m, long long q, long long max_work = kDefaultMaxEnumeration);
unsigned long long count_tropical_realizations_serial(
    const Matroid& m, long long q, long long max_work = kDefaultMaxEnumeration);

struct TorsorCheck {
  bool ok = false;
  unsigned long long subspace_count = 0;  // left side
  long long class_count = 0;
  int torus_rank = 0;                     // #M - c(M)
  Int predicted;                          // class_count * (q-1)^torus_rank
};

// Two-sided check of the torsor identity for M over F_q.
TorsorCheck verify_torsor_count(const Matroid& m, long long q,
                                long long max_search = kDefaultMaxSearch,
                                long long max_enum = kDefaultMaxEnumeration);

// Gaussian binomial [n k]_q, exact.
Int gaussian_binomial(int n, int k, long long q);

struct ArrangementCheck {
  bool ok = false;
  long long samples = 0;
  long long mismatches = 0;
};

// Cross-check that the hyperplane arrangement of A realizes M: for subsets
// S the corank of the column submatrix A_S must equal the corank of
// rank_M(S).  Exhaustive for n_elements <= 10, a 500-subset seeded sample
// above that.  Throws NotFullRank.
template <typename K>
ArrangementCheck arrangement_check(const Matrix<K>& a, const Matroid& m,
                                   std::uint64_t seed = 1);

}  // namespace tropfan
