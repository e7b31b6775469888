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

// Exact linear algebra over Q (GMP rationals) and over prime fields F_p,
// plus the integer-lattice routines (kernels, saturations, lattice index)
// that the fan layer builds on.  No floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "tropfan/errors.hpp"

namespace tropfan {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // list of rows

// The GMP class constructors take long, never long long.
static_assert(sizeof(long) == sizeof(long long), "LP64 required");
inline Int int_of(long long x) { return Int(static_cast<long>(x)); }
inline Rat rat_of(long long x) { return Rat(static_cast<long>(x)); }

bool is_prime(long long p);

// Element of F_p.  The modulus travels with the value so that mixed-modulus
// arithmetic can be rejected at runtime.  Primality is not re-checked here;
// construct moduli through PrimeField.
class Fp {
 public:
  Fp() = default;  // inert zero with modulus 0; any arithmetic on it throws
  Fp(long long value, long long p);

  long long value() const { return v_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const;
  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inverse() const;

 private:
  long long v_ = 0;
  long long p_ = 0;
};

// Checks primality once; afterwards elements are minted without re-checking.
class PrimeField {
 public:
  explicit PrimeField(long long p);
  long long modulus() const { return p_; }
  Fp operator()(long long v) const { return Fp(v, p_); }

 private:
  long long p_;
};

inline bool scalar_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }

// Dense row-major matrix over an exact field (Rat or Fp).
template <typename K>
class Matrix {
 public:
  Matrix(int rows, int cols, const K& fill)
      : rows_(rows),
        cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0) fail(Err::kBadInput, "negative matrix shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const K& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<K> a_;
};

using MatrixQ = Matrix<Rat>;
using MatrixFp = Matrix<Fp>;

template <typename K>
struct LinearAnalysis {
  int rank = 0;
  // Determinant for square inputs, absent otherwise.
  std::optional<K> det;
  // Basis of the right kernel, one vector per free column in column order,
  // each scaled so its first nonzero entry is 1.
  std::vector<std::vector<K>> kernel;
};

// Gauss-Jordan over the exact field; one pass produces rank, determinant
// and kernel together so the three can never disagree.
template <typename K>
LinearAnalysis<K> rank_det_kernel(const Matrix<K>& a) {
  const int m = a.rows(), n = a.cols();
  K zero, one;
  if constexpr (std::is_same_v<K, Rat>) {
    zero = Rat(0);
    one = Rat(1);
  } else {
    if (m == 0 || n == 0) fail(Err::kBadInput, "empty matrix over F_p");
    zero = zero_like(a.at(0, 0));
    one = one_like(a.at(0, 0));
  }
  Matrix<K> w = a;
  LinearAnalysis<K> out;
  std::vector<int> pivot_col;
  const bool square = (m == n);
  K detv = one;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i) {
      if (!scalar_is_zero(w.at(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(r, j));
      if (square) detv = -detv;
    }
    K piv = w.at(r, c);
    if (square) detv *= piv;
    for (int j = c; j < n; ++j) w.at(r, j) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || scalar_is_zero(w.at(i, c))) continue;
      K f = w.at(i, c);
      for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  out.rank = r;
  if (square) out.det = (r < n) ? zero : detv;
  // Kernel vectors, one per free column.
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<K> v(n, zero);
    v[fc] = one;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) {
      v[pivot_col[i]] = -w.at(i, fc);
    }
    // Scale so the first nonzero entry is 1.
    for (int j = 0; j < n; ++j) {
      if (!scalar_is_zero(v[j])) {
        K lead = v[j];
        for (int k = j; k < n; ++k) v[k] /= lead;
        break;
      }
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <typename K>
int rank_of_matrix(const Matrix<K>& a) {
  return rank_det_kernel(a).rank;
}

// Unique coefficients expressing v in the span of linearly independent
// generators over Q; nullopt when v lies outside the span.  Throws
// DependentGenerators when the generators are not independent.
std::optional<std::vector<Rat>> solve_in_span(
    const std::vector<std::vector<long long>>& gens,
    const std::vector<long long>& v);

// Same, filtered to nonnegative coefficients (membership in the simplicial
// cone spanned by the generators).
std::optional<std::vector<Rat>> solve_nonneg(
    const std::vector<std::vector<long long>>& gens,
    const std::vector<long long>& v);

// Rational variants used where intermediate points already carry
// denominators.
std::optional<std::vector<Rat>> solve_in_span_q(const std::vector<IntVec>& gens,
                                                const std::vector<Rat>& v);
std::optional<std::vector<Rat>> solve_nonneg_q(const std::vector<IntVec>& gens,
                                               const std::vector<Rat>& v);

// Fraction-free determinant of a square integer matrix (Bareiss).
Int det_bareiss(IntMat a);

// Index of the sublattice spanned by `vectors` inside the saturation of its
// span, computed as the gcd of all maximal minors.  Requires
// vectors.size() == ambient_rank; returns 0 when the vectors are dependent,
// 1 exactly when they form a lattice basis of the saturated span.
Int lattice_index(const std::vector<std::vector<long long>>& vectors,
                  int ambient_rank);

// Basis (as rows) of the lattice {x in Z^ncols : C x = 0}.  The result is
// saturated: it spans the full integer kernel, not a finite-index sublattice.
IntMat lattice_kernel(const IntMat& constraints, int ncols);

// Basis (as rows) of the saturation of the span of the given integer rows:
// (span_Q(rows) intersect Z^ncols).
IntMat saturation_basis(const IntMat& rows, int ncols);
IntMat saturation_basis_ll(const std::vector<std::vector<long long>>& rows,
                           int ncols);

// Overflow-checked narrowing.
long long to_ll(const Int& x);

IntMat to_intmat(const std::vector<std::vector<long long>>& rows);

}  // namespace tropfan
