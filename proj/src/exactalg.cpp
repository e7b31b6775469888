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

#include "tropfan/exactalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace tropfan {

const char* err_name(Err e) {
  switch (e) {
    case Err::kEmptyBases: return "EmptyBases";
    case Err::kUnequalCardinality: return "UnequalCardinality";
    case Err::kExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case Err::kLoopDetected: return "LoopDetected";
    case Err::kParameterOutOfRange: return "ParameterOutOfRange";
    case Err::kNotFullRank: return "NotFullRank";
    case Err::kLoopColumn: return "LoopColumn";
    case Err::kDimensionMismatch: return "DimensionMismatch";
    case Err::kNotABasis: return "NotABasis";
    case Err::kRankZero: return "RankZero";
    case Err::kDependentGenerators: return "DependentGenerators";
    case Err::kNotPure: return "NotPure";
    case Err::kNotSimplicial: return "NotSimplicial";
    case Err::kNoBasis: return "NoBasis";
    case Err::kSearchTooLarge: return "SearchTooLarge";
    case Err::kEnumerationTooLarge: return "EnumerationTooLarge";
    case Err::kBadInput: return "BadInput";
  }
  return "Unknown";
}

bool is_prime(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// Extended gcd: returns g = gcd(a, b) and x, y with a x + b y = g.
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

Fp::Fp(long long value, long long p) : p_(p) {
  if (p < 2) fail(Err::kBadInput, "modulus must be at least 2");
  v_ = value % p;
  if (v_ < 0) v_ += p;
}

Fp Fp::operator-() const {
  if (p_ == 0) fail(Err::kBadInput, "arithmetic on uninitialized F_p element");
  return Fp(p_ - v_, p_);
}

Fp Fp::operator+(const Fp& o) const {
  if (p_ == 0 || p_ != o.p_) fail(Err::kBadInput, "mixed F_p moduli");
  return Fp(v_ + o.v_, p_);
}

Fp Fp::operator-(const Fp& o) const {
  if (p_ == 0 || p_ != o.p_) fail(Err::kBadInput, "mixed F_p moduli");
  return Fp(v_ - o.v_ + p_, p_);
}

Fp Fp::operator*(const Fp& o) const {
  if (p_ == 0 || p_ != o.p_) fail(Err::kBadInput, "mixed F_p moduli");
  return Fp(v_ * o.v_, p_);  // p <= 2^31 keeps the product in range
}

Fp Fp::inverse() const {
  if (p_ == 0) fail(Err::kBadInput, "arithmetic on uninitialized F_p element");
  if (v_ == 0) fail(Err::kBadInput, "division by zero in F_p");
  long long x, y;
  egcd(v_, p_, x, y);
  return Fp(x, p_);
}

Fp Fp::operator/(const Fp& o) const {
  if (p_ == 0 || p_ != o.p_) fail(Err::kBadInput, "mixed F_p moduli");
  return *this * o.inverse();
}

PrimeField::PrimeField(long long p) : p_(p) {
  if (p < 2 || p > (1LL << 31)) {
    fail(Err::kParameterOutOfRange, "field characteristic out of range");
  }
  if (!is_prime(p)) {
    fail(Err::kParameterOutOfRange,
         "modulus " + std::to_string(p) + " is not prime");
  }
}

namespace {

MatrixQ augmented_from_ll(const std::vector<std::vector<long long>>& gens,
                          const std::vector<long long>& v) {
  const int k = static_cast<int>(gens.size());
  const int n = static_cast<int>(v.size());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) {
      fail(Err::kDimensionMismatch, "generator length mismatch");
    }
  }
  MatrixQ a(n, k + 1, Rat(0));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) a.at(i, j) = rat_of(gens[j][i]);
  }
  for (int i = 0; i < n; ++i) a.at(i, k) = rat_of(v[i]);
  return a;
}

// Solve G x = v for independent columns G; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_core(MatrixQ aug, int k) {
  const int n = aug.rows();
  // Eliminate on the generator columns only.
  int r = 0;
  std::vector<int> pivot_row_of_col(k, -1);
  for (int c = 0; c < k && r < n; ++c) {
    int pr = -1;
    for (int i = r; i < n; ++i) {
      if (sgn(aug.at(i, c)) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j <= k; ++j) std::swap(aug.at(pr, j), aug.at(r, j));
    }
    Rat piv = aug.at(r, c);
    for (int j = c; j <= k; ++j) aug.at(r, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == r || sgn(aug.at(i, c)) == 0) continue;
      Rat f = aug.at(i, c);
      for (int j = c; j <= k; ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  if (r < k) fail(Err::kDependentGenerators, "generators are dependent");
  for (int i = r; i < n; ++i) {
    if (sgn(aug.at(i, k)) != 0) return std::nullopt;  // outside the span
  }
  std::vector<Rat> x(k, Rat(0));
  for (int c = 0; c < k; ++c) x[c] = aug.at(pivot_row_of_col[c], k);
  return x;
}

}  // namespace

std::optional<std::vector<Rat>> solve_in_span(
    const std::vector<std::vector<long long>>& gens,
    const std::vector<long long>& v) {
  const int k = static_cast<int>(gens.size());
  if (k == 0) {
    for (long long c : v) {
      if (c != 0) return std::nullopt;
    }
    return std::vector<Rat>{};
  }
  return solve_core(augmented_from_ll(gens, v), k);
}

std::optional<std::vector<Rat>> solve_nonneg(
    const std::vector<std::vector<long long>>& gens,
    const std::vector<long long>& v) {
  auto x = solve_in_span(gens, v);
  if (!x) return std::nullopt;
  for (const Rat& c : *x) {
    if (sgn(c) < 0) return std::nullopt;
  }
  return x;
}

std::optional<std::vector<Rat>> solve_in_span_q(const std::vector<IntVec>& gens,
                                                const std::vector<Rat>& v) {
  const int k = static_cast<int>(gens.size());
  const int n = static_cast<int>(v.size());
  if (k == 0) {
    for (const Rat& c : v) {
      if (sgn(c) != 0) return std::nullopt;
    }
    return std::vector<Rat>{};
  }
  MatrixQ a(n, k + 1, Rat(0));
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(gens[j].size()) != n) {
      fail(Err::kDimensionMismatch, "generator length mismatch");
    }
    for (int i = 0; i < n; ++i) a.at(i, j) = Rat(gens[j][i]);
  }
  for (int i = 0; i < n; ++i) a.at(i, k) = v[i];
  return solve_core(std::move(a), k);
}

std::optional<std::vector<Rat>> solve_nonneg_q(const std::vector<IntVec>& gens,
                                               const std::vector<Rat>& v) {
  auto x = solve_in_span_q(gens, v);
  if (!x) return std::nullopt;
  for (const Rat& c : *x) {
    if (sgn(c) < 0) return std::nullopt;
  }
  return x;
}

Int det_bareiss(IntMat a) {
  const int s = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != s) {
      fail(Err::kDimensionMismatch, "determinant of non-square matrix");
    }
  }
  if (s == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < s; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < s; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Int(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < s; ++i) {
      for (int j = k + 1; j < s; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[s - 1][s - 1] : Int(-a[s - 1][s - 1]);
}

Int lattice_index(const std::vector<std::vector<long long>>& vectors,
                  int ambient_rank) {
  const int k = static_cast<int>(vectors.size());
  if (k != ambient_rank) {
    fail(Err::kDimensionMismatch, "lattice_index wants ambient_rank vectors");
  }
  if (k == 0) return Int(1);
  const int m = static_cast<int>(vectors[0].size());
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != m) {
      fail(Err::kDimensionMismatch, "vector length mismatch");
    }
  }
  if (m < k) return Int(0);
  // gcd of all k x k minors; the index in the saturation equals this gcd
  // by the elementary divisor form.
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  Int g(0);
  while (true) {
    IntMat sub(k, IntVec(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub[i][j] = int_of(vectors[i][cols[j]]);
    }
    Int d = det_bareiss(std::move(sub));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return g;
    // next combination
    int i = k - 1;
    while (i >= 0 && cols[i] == m - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

IntMat lattice_kernel(const IntMat& constraints, int ncols) {
  const int r = static_cast<int>(constraints.size());
  for (const auto& row : constraints) {
    if (static_cast<int>(row.size()) != ncols) {
      fail(Err::kDimensionMismatch, "constraint length mismatch");
    }
  }
  // Column reduction (HNF style) with a unimodular transform U tracked on
  // the columns; the columns of U that end up annihilated form a saturated
  // kernel basis.
  IntMat k = constraints;
  std::vector<IntVec> ucols(ncols, IntVec(ncols, Int(0)));
  for (int j = 0; j < ncols; ++j) ucols[j][j] = 1;

  auto col_swap = [&](int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < r; ++i) std::swap(k[i][j1], k[i][j2]);
    std::swap(ucols[j1], ucols[j2]);
  };
  auto col_axpy = [&](int dst, int src, const Int& q) {
    // col_dst -= q * col_src
    if (q == 0) return;
    for (int i = 0; i < r; ++i) k[i][dst] -= q * k[i][src];
    for (int i = 0; i < ncols; ++i) ucols[dst][i] -= q * ucols[src][i];
  };

  int pivot = 0;
  for (int row = 0; row < r && pivot < ncols; ++row) {
    while (true) {
      int best = -1;
      for (int j = pivot; j < ncols; ++j) {
        if (k[row][j] == 0) continue;
        if (best < 0 || mpz_cmpabs(k[row][j].get_mpz_t(),
                                   k[row][best].get_mpz_t()) < 0) {
          best = j;
        }
      }
      if (best < 0) break;  // row already zero on the remaining columns
      col_swap(best, pivot);
      bool cleared = true;
      for (int j = pivot + 1; j < ncols; ++j) {
        if (k[row][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), k[row][j].get_mpz_t(),
                   k[row][pivot].get_mpz_t());
        col_axpy(j, pivot, q);
        if (k[row][j] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }
  IntMat basis;
  for (int j = pivot; j < ncols; ++j) basis.push_back(ucols[j]);
  return basis;
}

IntMat saturation_basis(const IntMat& rows, int ncols) {
  if (rows.empty()) return {};
  const int kk = static_cast<int>(rows.size());
  MatrixQ v(kk, ncols, Rat(0));
  for (int i = 0; i < kk; ++i) {
    if (static_cast<int>(rows[i].size()) != ncols) {
      fail(Err::kDimensionMismatch, "row length mismatch");
    }
    for (int j = 0; j < ncols; ++j) v.at(i, j) = Rat(rows[i][j]);
  }
  auto analysis = rank_det_kernel(v);
  // Clear denominators of each kernel vector; these cut out span_Q(rows).
  IntMat constraints;
  for (const auto& w : analysis.kernel) {
    Int lcm(1);
    for (const Rat& x : w) {
      Int den = x.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    IntVec c(ncols);
    for (int j = 0; j < ncols; ++j) {
      Rat scaled = w[j] * Rat(lcm);
      c[j] = scaled.get_num();  // denominator is 1 after scaling
    }
    constraints.push_back(std::move(c));
  }
  return lattice_kernel(constraints, ncols);
}

IntMat saturation_basis_ll(const std::vector<std::vector<long long>>& rows,
                           int ncols) {
  return saturation_basis(to_intmat(rows), ncols);
}

long long to_ll(const Int& x) {
  if (!x.fits_slong_p()) fail(Err::kBadInput, "integer overflow in narrowing");
  return x.get_si();
}

IntMat to_intmat(const std::vector<std::vector<long long>>& rows) {
  IntMat out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    IntVec v;
    v.reserve(r.size());
    for (long long x : r) v.push_back(int_of(x));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tropfan
