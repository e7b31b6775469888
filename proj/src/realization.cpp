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

#include "tropfan/realization.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropfan {

namespace {

long long mod_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) fail(Err::kBadInput, "inverse of zero in F_p");
  return ((t % p) + p) % p;
}

// Small dense workhorse for the hot enumeration loops: row-major entries
// in [0, p).
struct FlatMat {
  int rows = 0;
  int cols = 0;
  long long p = 0;
  std::vector<long long> e;

  long long& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const {
    return e[static_cast<size_t>(i) * cols + j];
  }
};

long long det_mod(const FlatMat& a, const std::vector<int>& col_subset) {
  const int k = static_cast<int>(col_subset.size());
  const long long p = a.p;
  std::vector<long long> w(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) w[i * k + j] = a.at(i, col_subset[j]);
  }
  long long det = 1;
  for (int c = 0; c < k; ++c) {
    int pr = -1;
    for (int i = c; i < k; ++i) {
      if (w[i * k + c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) return 0;
    if (pr != c) {
      for (int j = 0; j < k; ++j) std::swap(w[pr * k + j], w[c * k + j]);
      det = p - det;
    }
    long long piv = w[c * k + c];
    det = (det * piv) % p;
    long long inv = mod_inverse(piv, p);
    for (int i = c + 1; i < k; ++i) {
      long long f = (w[i * k + c] * inv) % p;
      if (f == 0) continue;
      for (int j = c; j < k; ++j) {
        w[i * k + j] = (w[i * k + j] + p * p - f * w[c * k + j]) % p;
      }
    }
  }
  return det % p;
}

void combinations(int n, int k,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Projective representatives of F_p^dim (first nonzero entry 1), in
// lexicographic order.
std::vector<std::vector<long long>> projective_points(long long p, int dim) {
  std::vector<std::vector<long long>> pts;
  std::vector<long long> v(dim, 0);
  while (true) {
    for (long long x : v) {
      if (x == 0) continue;
      if (x == 1) {
        pts.push_back(v);
      }
      break;
    }
    int i = dim - 1;
    while (i >= 0 && v[i] == p - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return pts;
}

// Lexicographically least matrix in the residual torus orbit: row scalings
// (1, t_1, ..., t_d) followed by first-nonzero-to-1 column renormalization.
std::vector<long long> torus_canonical(const FlatMat& a) {
  const int d1 = a.rows;
  const long long p = a.p;
  std::vector<long long> best;
  std::vector<long long> t(d1, 1);
  while (true) {
    std::vector<long long> cand(a.e.size());
    for (int j = 0; j < a.cols; ++j) {
      long long lead = 0;
      for (int i = 0; i < d1; ++i) {
        long long x = (a.at(i, j) * t[i]) % p;
        if (lead == 0 && x != 0) lead = mod_inverse(x, p);
      }
      for (int i = 0; i < d1; ++i) {
        cand[static_cast<size_t>(i) * a.cols + j] =
            (a.at(i, j) * t[i]) % p * lead % p;
      }
    }
    if (best.empty() || cand < best) best = std::move(cand);
    // Next torus element; t[0] stays 1.
    int i = d1 - 1;
    while (i >= 1 && t[i] == p - 1) t[i--] = 1;
    if (i < 1) break;
    ++t[i];
  }
  return best;
}

}  // namespace

template <typename K>
GammaCheck is_gamma_point(const Matroid& m, const Matrix<K>& a) {
  if (a.rows() != m.rank() || a.cols() != m.n_elements()) {
    fail(Err::kDimensionMismatch, "matrix shape differs from (rank, ground)");
  }
  GammaCheck out;
  out.ok = true;
  const int d1 = m.rank();
  bool done = false;
  combinations(a.cols(), d1, [&](const std::vector<int>& cols) {
    if (done) return;
    Matrix<K> sub(d1, d1, zero_like(a.at(0, 0)));
    SetMask s = 0;
    for (int j = 0; j < d1; ++j) {
      s |= SetMask(1) << cols[j];
      for (int i = 0; i < d1; ++i) sub.at(i, j) = a.at(i, cols[j]);
    }
    auto det = rank_det_kernel(sub).det;
    const bool nonzero = det && !scalar_is_zero(*det);
    if (nonzero != m.is_basis(s)) {
      out.ok = false;
      out.first_failure = s;
      out.failure_is_basis = m.is_basis(s);
      done = true;
    }
  });
  return out;
}

template GammaCheck is_gamma_point<Rat>(const Matroid&, const Matrix<Rat>&);
template GammaCheck is_gamma_point<Fp>(const Matroid&, const Matrix<Fp>&);

MatrixFp GaugeClass::matrix() const {
  PrimeField field(prime);
  MatrixFp a(rows, cols, field(0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      a.at(i, j) = field(entries[static_cast<size_t>(i) * cols + j]);
    }
  }
  return a;
}

namespace {

struct SearchContext {
  const Matroid* m = nullptr;
  long long p = 0;
  int d1 = 0;  // rows
  int n1 = 0;  // cols
  SetMask gauge_basis = 0;
  std::vector<int> free_cols;  // non-basis columns, ascending
  std::vector<std::vector<long long>> points;
};

// All fully determined subsets that close over the newly assigned column
// must satisfy the minor/basis biconditional.
bool new_subsets_ok(const SearchContext& ctx, const FlatMat& work,
                    SetMask determined, int newcol) {
  const int d = ctx.d1 - 1;
  std::vector<int> avail = mask_to_list(determined);
  bool ok = true;
  combinations(static_cast<int>(avail.size()), d,
               [&](const std::vector<int>& pick) {
                 if (!ok) return;
                 std::vector<int> cols;
                 cols.reserve(ctx.d1);
                 SetMask s = SetMask(1) << newcol;
                 for (int t : pick) {
                   cols.push_back(avail[t]);
                   s |= SetMask(1) << avail[t];
                 }
                 cols.push_back(newcol);
                 std::sort(cols.begin(), cols.end());
                 const bool nonzero = det_mod(work, cols) != 0;
                 if (nonzero != ctx.m->is_basis(s)) ok = false;
               });
  return ok;
}

void dfs_search(const SearchContext& ctx, FlatMat& work, SetMask determined,
                size_t next, SearchMode mode,
                std::vector<std::vector<long long>>& hits, bool& stop) {
  if (stop) return;
  if (next == ctx.free_cols.size()) {
    hits.push_back(torus_canonical(work));
    if (mode == SearchMode::kFirst) stop = true;
    return;
  }
  const int col = ctx.free_cols[next];
  for (const auto& pt : ctx.points) {
    for (int i = 0; i < ctx.d1; ++i) work.at(i, col) = pt[i];
    if (new_subsets_ok(ctx, work, determined, col)) {
      dfs_search(ctx, work, determined | (SetMask(1) << col), next + 1, mode,
                 hits, stop);
      if (stop) return;
    }
  }
  for (int i = 0; i < ctx.d1; ++i) work.at(i, col) = 0;
}

SearchContext make_context(const Matroid& m, long long p, long long max_work) {
  PrimeField field(p);  // primality check
  (void)field;
  if (p > 13) {
    fail(Err::kParameterOutOfRange, "search supports p <= 13");
  }
  if (m.bases().empty()) fail(Err::kNoBasis, "matroid has no bases");
  SearchContext ctx;
  ctx.m = &m;
  ctx.p = p;
  ctx.d1 = m.rank();
  ctx.n1 = m.n_elements();
  ctx.gauge_basis = m.bases().front();  // lex-least
  for (int c = 0; c < ctx.n1; ++c) {
    if (!(ctx.gauge_basis & (SetMask(1) << c))) ctx.free_cols.push_back(c);
  }
  ctx.points = projective_points(p, ctx.d1);
  // Guard on the raw assignment space.
  Int space(1);
  for (size_t i = 0; i < ctx.free_cols.size(); ++i) {
    space *= int_of(static_cast<long long>(ctx.points.size()));
  }
  if (space > int_of(max_work)) {
    fail(Err::kSearchTooLarge,
         "projective assignment space exceeds the work cap");
  }
  return ctx;
}

FlatMat gauge_seed(const SearchContext& ctx) {
  FlatMat work;
  work.rows = ctx.d1;
  work.cols = ctx.n1;
  work.p = ctx.p;
  work.e.assign(static_cast<size_t>(ctx.d1) * ctx.n1, 0);
  int row = 0;
  for (int c : mask_to_list(ctx.gauge_basis)) {
    work.at(row, c) = 1;
    ++row;
  }
  return work;
}

std::vector<GaugeClass> finish_classes(const SearchContext& ctx,
                                       std::vector<std::vector<long long>> hits) {
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::vector<GaugeClass> out;
  out.reserve(hits.size());
  for (auto& h : hits) {
    GaugeClass g;
    g.prime = ctx.p;
    g.rows = ctx.d1;
    g.cols = ctx.n1;
    g.gauge_basis = ctx.gauge_basis;
    g.entries = std::move(h);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<GaugeClass> search_realizations_serial(const Matroid& m,
                                                   long long p,
                                                   SearchMode mode,
                                                   long long max_work) {
  SearchContext ctx = make_context(m, p, max_work);
  FlatMat work = gauge_seed(ctx);
  std::vector<std::vector<long long>> hits;
  bool stop = false;
  dfs_search(ctx, work, ctx.gauge_basis, 0, mode, hits, stop);
  return finish_classes(ctx, std::move(hits));
}

std::vector<GaugeClass> search_realizations(const Matroid& m, long long p,
                                            SearchMode mode,
                                            long long max_work) {
  SearchContext ctx = make_context(m, p, max_work);
  if (mode == SearchMode::kFirst || ctx.free_cols.empty()) {
    return search_realizations_serial(m, p, mode, max_work);
  }
  // Parallel split over the first free column's projective choices.
  const int first = ctx.free_cols[0];
  const int nchoices = static_cast<int>(ctx.points.size());
  std::vector<std::vector<std::vector<long long>>> partial(nchoices);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < nchoices; ++c) {
    FlatMat work = gauge_seed(ctx);
    for (int i = 0; i < ctx.d1; ++i) work.at(i, first) = ctx.points[c][i];
    if (!new_subsets_ok(ctx, work, ctx.gauge_basis, first)) continue;
    bool stop = false;
    dfs_search(ctx, work, ctx.gauge_basis | (SetMask(1) << first), 1, mode,
               partial[c], stop);
  }
  std::vector<std::vector<long long>> hits;
  for (auto& part : partial) {
    for (auto& h : part) hits.push_back(std::move(h));
  }
  return finish_classes(ctx, std::move(hits));
}

GaugeClass canonical_class_of(const Matroid& m, const MatrixFp& a) {
  const GammaCheck check = is_gamma_point(m, a);
  if (!check.ok) {
    fail(Err::kBadInput, "matrix does not realize the matroid");
  }
  const long long p = a.at(0, 0).modulus();
  PrimeField field(p);
  const int d1 = m.rank();
  const int n1 = m.n_elements();
  const SetMask gauge_basis = m.bases().front();
  const std::vector<int> basis_cols = mask_to_list(gauge_basis);

  // Invert the basis submatrix by Gauss-Jordan on [A_B | I].
  MatrixFp aug(d1, 2 * d1, field(0));
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d1; ++j) aug.at(i, j) = a.at(i, basis_cols[j]);
    aug.at(i, d1 + i) = field(1);
  }
  for (int col = 0; col < d1; ++col) {
    int piv = col;
    while (piv < d1 && aug.at(piv, col).value() == 0) ++piv;
    if (piv == d1) fail(Err::kNotFullRank, "singular basis submatrix");
    for (int j = 0; j < 2 * d1; ++j) std::swap(aug.at(col, j), aug.at(piv, j));
    const Fp inv = aug.at(col, col).inverse();
    for (int j = 0; j < 2 * d1; ++j) aug.at(col, j) = aug.at(col, j) * inv;
    for (int i = 0; i < d1; ++i) {
      if (i == col) continue;
      const Fp f = aug.at(i, col);
      if (f.value() == 0) continue;
      for (int j = 0; j < 2 * d1; ++j) {
        aug.at(i, j) = aug.at(i, j) - f * aug.at(col, j);
      }
    }
  }

  FlatMat fixed{d1, n1, p, std::vector<long long>(
                               static_cast<size_t>(d1) * n1, 0)};
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < n1; ++j) {
      Fp s = field(0);
      for (int k = 0; k < d1; ++k) s = s + aug.at(i, d1 + k) * a.at(k, j);
      fixed.e[static_cast<size_t>(i) * n1 + j] = s.value();
    }
  }

  GaugeClass g;
  g.prime = p;
  g.rows = d1;
  g.cols = n1;
  g.gauge_basis = gauge_basis;
  g.entries = torus_canonical(fixed);
  return g;
}

Int gaussian_binomial(int n, int k, long long q) {
  if (k < 0 || k > n) return Int(0);
  Int num(1), den(1);
  for (int i = 0; i < k; ++i) {
    Int qn, qd;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(n - i));
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(i + 1));
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

namespace {

struct RrefPattern {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free_cells;  // (row, col)
};

std::vector<RrefPattern> rref_patterns(int rows, int cols) {
  std::vector<RrefPattern> out;
  combinations(cols, rows, [&](const std::vector<int>& piv) {
    RrefPattern pat;
    pat.pivots = piv;
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    for (int i = 0; i < rows; ++i) {
      for (int j = piv[i] + 1; j < cols; ++j) {
        if (!is_piv[j]) pat.free_cells.push_back({i, j});
      }
    }
    out.push_back(std::move(pat));
  });
  return out;
}

unsigned long long count_pattern(const Matroid& m, long long q,
                                 const RrefPattern& pat) {
  const int d1 = m.rank();
  const int n1 = m.n_elements();
  FlatMat work;
  work.rows = d1;
  work.cols = n1;
  work.p = q;
  work.e.assign(static_cast<size_t>(d1) * n1, 0);
  for (int i = 0; i < d1; ++i) work.at(i, pat.pivots[i]) = 1;
  const size_t nfree = pat.free_cells.size();
  std::vector<long long> digits(nfree, 0);
  unsigned long long count = 0;
  while (true) {
    // Column matroid comparison: every maximal minor nonzero iff basis.
    bool match = true;
    combinations(n1, d1, [&](const std::vector<int>& cols) {
      if (!match) return;
      SetMask s = 0;
      for (int c : cols) s |= SetMask(1) << c;
      const bool nonzero = det_mod(work, cols) != 0;
      if (nonzero != m.is_basis(s)) match = false;
    });
    if (match) ++count;
    // Odometer over the free cells.
    size_t i = 0;
    while (i < nfree && digits[i] == q - 1) {
      digits[i] = 0;
      work.at(pat.free_cells[i].first, pat.free_cells[i].second) = 0;
      ++i;
    }
    if (i == nfree) break;
    ++digits[i];
    work.at(pat.free_cells[i].first, pat.free_cells[i].second) = digits[i];
  }
  return count;
}

std::vector<RrefPattern> guarded_patterns(const Matroid& m, long long q,
                                          long long max_work) {
  PrimeField field(q);  // primality check
  (void)field;
  const int d1 = m.rank();
  const int n1 = m.n_elements();
  if (gaussian_binomial(n1, d1, q) > int_of(max_work)) {
    fail(Err::kEnumerationTooLarge,
         "subspace enumeration exceeds the work cap");
  }
  return rref_patterns(d1, n1);
}

}  // namespace

unsigned long long count_tropical_realizations_serial(const Matroid& m,
                                                      long long q,
                                                      long long max_work) {
  auto patterns = guarded_patterns(m, q, max_work);
  unsigned long long count = 0;
  for (const auto& pat : patterns) count += count_pattern(m, q, pat);
  return count;
}

unsigned long long count_tropical_realizations(const Matroid& m, long long q,
                                               long long max_work) {
  auto patterns = guarded_patterns(m, q, max_work);
  const int npat = static_cast<int>(patterns.size());
  unsigned long long count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (int i = 0; i < npat; ++i) {
    count += count_pattern(m, q, patterns[i]);
  }
  return count;
}

TorsorCheck verify_torsor_count(const Matroid& m, long long q,
                                long long max_search, long long max_enum) {
  TorsorCheck out;
  out.subspace_count = count_tropical_realizations(m, q, max_enum);
  out.class_count = static_cast<long long>(
      search_realizations(m, q, SearchMode::kAllClasses, max_search).size());
  out.torus_rank = m.n_elements() - connected_components(m).count();
  Int torus(1);
  for (int i = 0; i < out.torus_rank; ++i) torus *= int_of(q - 1);
  out.predicted = int_of(out.class_count) * torus;
  out.ok = (int_of(static_cast<long long>(out.subspace_count)) == out.predicted);
  return out;
}

template <typename K>
ArrangementCheck arrangement_check(const Matrix<K>& a, const Matroid& m,
                                   std::uint64_t seed) {
  if (a.rows() != m.rank() || a.cols() != m.n_elements()) {
    fail(Err::kDimensionMismatch, "matrix shape differs from (rank, ground)");
  }
  if (rank_of_matrix(a) < a.rows()) {
    fail(Err::kNotFullRank, "realization matrix is rank deficient");
  }
  ArrangementCheck out;
  const int n = m.n_elements();
  auto rank_of_subset = [&](SetMask s) {
    auto cols = mask_to_list(s);
    if (cols.empty()) return 0;
    Matrix<K> sub(a.rows(), static_cast<int>(cols.size()),
                  zero_like(a.at(0, 0)));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      for (int i = 0; i < a.rows(); ++i) sub.at(i, j) = a.at(i, cols[j]);
    }
    return rank_of_matrix(sub);
  };
  auto check_one = [&](SetMask s) {
    ++out.samples;
    if (rank_of_subset(s) != m.rank_of(s)) ++out.mismatches;
  };
  if (n <= 10) {
    for (SetMask s = 0; s <= m.full_mask(); ++s) check_one(s);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 500; ++i) {
      check_one(static_cast<SetMask>(rng() & m.full_mask()));
    }
  }
  out.ok = (out.mismatches == 0);
  return out;
}

template ArrangementCheck arrangement_check<Rat>(const Matrix<Rat>&,
                                                 const Matroid&,
                                                 std::uint64_t);
template ArrangementCheck arrangement_check<Fp>(const Matrix<Fp>&,
                                                const Matroid&, std::uint64_t);

}  // namespace tropfan
