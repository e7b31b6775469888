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

#include "tropfan/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropfan {

QuotientVector QuotientVector::canonical(std::vector<long long> raw) {
  if (raw.empty()) fail(Err::kBadInput, "empty vector");
  long long last = raw.back();
  for (auto& x : raw) x -= last;
  QuotientVector q;
  q.c = std::move(raw);
  return q;
}

QuotientVector QuotientVector::indicator(SetMask subset, int length) {
  std::vector<long long> raw(length, 0);
  for (int i = 0; i < length; ++i) {
    if (subset & (SetMask(1) << i)) raw[i] = 1;
  }
  return canonical(std::move(raw));
}

bool QuotientVector::is_zero() const {
  for (long long x : c) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<long long> QuotientVector::truncated() const {
  return std::vector<long long>(c.begin(), c.end() - 1);
}

WeightedFan WeightedFan::from_maximal(int ambient_rank,
                                      std::vector<QuotientVector> rays,
                                      std::vector<Cone> maximal,
                                      std::vector<long long> weights) {
  if (maximal.size() != weights.size()) {
    fail(Err::kBadInput, "weight count differs from maximal cone count");
  }
  for (const auto& r : rays) {
    if (r.length() != ambient_rank + 1) {
      fail(Err::kBadInput, "ray length differs from ambient rank + 1");
    }
    if (r.c.back() != 0) fail(Err::kBadInput, "ray not in canonical form");
  }
  const int nrays = static_cast<int>(rays.size());
  for (auto& c : maximal) {
    std::sort(c.rays.begin(), c.rays.end());
    for (int i : c.rays) {
      if (i < 0 || i >= nrays) fail(Err::kBadInput, "ray index out of range");
    }
    if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end()) {
      fail(Err::kBadInput, "repeated ray index inside a cone");
    }
  }
  // Sort maximal cones (keeping weights attached); duplicates are kept for
  // validation to report.
  std::vector<int> order(maximal.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return maximal[a].rays < maximal[b].rays;
  });
  WeightedFan f;
  f.ambient_rank_ = ambient_rank;
  f.rays_ = std::move(rays);
  for (int i : order) {
    f.maximal_.push_back(maximal[i]);
    f.weights_.push_back(weights[i]);
  }
  // Face closure.
  std::set<std::vector<int>> faces;
  faces.insert({});  // the origin
  size_t maxdim = 0;
  for (const auto& c : f.maximal_) {
    const auto& r = c.rays;
    maxdim = std::max(maxdim, r.size());
    for (SetMask s = 0; s < (SetMask(1) << r.size()); ++s) {
      std::vector<int> face;
      for (size_t i = 0; i < r.size(); ++i) {
        if (s & (SetMask(1) << i)) face.push_back(r[i]);
      }
      faces.insert(std::move(face));
    }
  }
  f.cones_by_dim_.resize(maxdim + 1);
  for (const auto& face : faces) {
    f.cones_by_dim_[face.size()].push_back(Cone{face});
  }
  // std::set iteration is already sorted; per-dimension lists inherit order.
  return f;
}

std::vector<std::vector<long long>> WeightedFan::generators_of(
    const Cone& c) const {
  std::vector<std::vector<long long>> out;
  out.reserve(c.rays.size());
  for (int i : c.rays) out.push_back(rays_[i].truncated());
  return out;
}

namespace {

MatrixQ rows_to_matrix(const std::vector<std::vector<long long>>& rows,
                       int ncols) {
  MatrixQ m(static_cast<int>(rows.size()), ncols, Rat(0));
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < ncols; ++j) m.at(i, j) = rat_of(rows[i][j]);
  }
  return m;
}

MatrixQ introws_to_matrix(const IntMat& rows, int ncols) {
  MatrixQ m(static_cast<int>(rows.size()), ncols, Rat(0));
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < ncols; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

int rank_of_rows(const std::vector<std::vector<long long>>& rows, int ncols) {
  if (rows.empty()) return 0;
  return rank_of_matrix(rows_to_matrix(rows, ncols));
}

long long content_ll(const std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Coefficients of v in the given independent integer rows (must lie in the
// span; this is an internal invariant, not user input).
std::vector<Rat> coords_in_rows(const IntMat& basis, const IntVec& v) {
  std::vector<Rat> vq;
  vq.reserve(v.size());
  for (const Int& x : v) vq.emplace_back(x);
  auto sol = solve_in_span_q(basis, vq);
  if (!sol) fail(Err::kBadInput, "vector escaped its expected span");
  return *sol;
}

// The lattice normal lift u_{sigma/tau}: an integer vector in the saturated
// lattice of sigma whose class generates (N cap span sigma)/(N cap span tau)
// on the side of sigma's extra ray.
IntVec quotient_generator(const IntMat& sat_tau, const IntMat& sat_sigma,
                          const std::vector<long long>& extra_ray, int n) {
  const int d = static_cast<int>(sat_sigma.size());
  // Coordinates of tau's lattice basis inside sigma's; integral because
  // sat_sigma is saturated.
  MatrixQ c(static_cast<int>(sat_tau.size()), d, Rat(0));
  for (int i = 0; i < static_cast<int>(sat_tau.size()); ++i) {
    auto coords = coords_in_rows(sat_sigma, sat_tau[i]);
    for (int j = 0; j < d; ++j) c.at(i, j) = coords[j];
  }
  auto analysis = rank_det_kernel(c);
  if (analysis.kernel.size() != 1) {
    fail(Err::kBadInput, "quotient lattice is not rank one");
  }
  // Primitive integer functional phi with phi . (tau coords) = 0.
  IntVec phi(d);
  {
    Int lcm(1);
    for (const Rat& x : analysis.kernel[0]) {
      Int den = x.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Int g(0);
    for (int j = 0; j < d; ++j) {
      Rat scaled = analysis.kernel[0][j] * Rat(lcm);
      phi[j] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), phi[j].get_mpz_t());
    }
    for (int j = 0; j < d; ++j) mpz_divexact(phi[j].get_mpz_t(),
                                             phi[j].get_mpz_t(),
                                             g.get_mpz_t());
  }
  // Orient phi toward the extra ray.
  IntVec extra(n);
  for (int j = 0; j < n; ++j) extra[j] = int_of(extra_ray[j]);
  auto ycoords = coords_in_rows(sat_sigma, extra);
  Rat side(0);
  for (int j = 0; j < d; ++j) side += Rat(phi[j]) * ycoords[j];
  if (sgn(side) == 0) fail(Err::kBadInput, "extra ray lies in the facet span");
  if (sgn(side) < 0) {
    for (auto& x : phi) x = -x;
  }
  // Integer x with phi . x = 1 (phi is primitive), by iterated Bezout.
  IntVec x(d, Int(0));
  Int g(0);
  for (int j = 0; j < d; ++j) {
    if (phi[j] == 0) continue;
    if (g == 0) {
      // g = |phi_j|, x_j = sign
      x[j] = sgn(phi[j]);
      g = abs(phi[j]);
      continue;
    }
    Int a, b, g2;
    mpz_gcdext(g2.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(),
               phi[j].get_mpz_t());
    for (int t = 0; t < j; ++t) x[t] *= a;
    x[j] = b;
    g = g2;
  }
  if (g != 1) fail(Err::kBadInput, "functional is not primitive");
  IntVec u(n, Int(0));
  for (int j = 0; j < d; ++j) {
    if (x[j] == 0) continue;
    for (int t = 0; t < n; ++t) u[t] += x[j] * sat_sigma[j][t];
  }
  return u;
}

bool in_rational_span(const IntMat& rows, const IntVec& v, int n) {
  MatrixQ base = introws_to_matrix(rows, n);
  int r0 = rows.empty() ? 0 : rank_det_kernel(base).rank;
  MatrixQ ext(static_cast<int>(rows.size()) + 1, n, Rat(0));
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < n; ++j) ext.at(i, j) = Rat(rows[i][j]);
  }
  for (int j = 0; j < n; ++j) {
    ext.at(static_cast<int>(rows.size()), j) = Rat(v[j]);
  }
  return rank_det_kernel(ext).rank == r0;
}

BalancingEntry balance_at(const WeightedFan& f, const Cone& tau, int n) {
  BalancingEntry entry;
  entry.tau = tau;
  IntMat sat_tau = saturation_basis_ll(f.generators_of(tau), n);
  IntVec total(n, Int(0));
  for (size_t mi = 0; mi < f.maximal().size(); ++mi) {
    const Cone& sigma = f.maximal()[mi];
    if (!std::includes(sigma.rays.begin(), sigma.rays.end(), tau.rays.begin(),
                       tau.rays.end())) {
      continue;
    }
    IntMat sat_sigma = saturation_basis_ll(f.generators_of(sigma), n);
    // The unique ray of sigma not in tau.
    std::vector<int> extra;
    std::set_difference(sigma.rays.begin(), sigma.rays.end(), tau.rays.begin(),
                        tau.rays.end(), std::back_inserter(extra));
    if (extra.size() != 1) {
      fail(Err::kBadInput, "codimension mismatch in star of tau");
    }
    IntVec u = quotient_generator(sat_tau, sat_sigma,
                                  f.rays()[extra[0]].truncated(), n);
    const long long w = f.weights()[mi];
    for (int t = 0; t < n; ++t) total[t] += int_of(w) * u[t];
  }
  entry.balanced = in_rational_span(sat_tau, total, n);
  if (!entry.balanced) {
    entry.residual.reserve(n);
    for (const Int& x : total) entry.residual.push_back(to_ll(x));
  }
  return entry;
}

void require_pure_simplicial(const WeightedFan& f) {
  const int d = f.dim();
  for (const auto& sigma : f.maximal()) {
    if (sigma.dim() != d) {
      fail(Err::kNotPure, "maximal cones of unequal dimension");
    }
    auto gens = f.generators_of(sigma);
    if (rank_of_rows(gens, f.ambient_rank()) != sigma.dim()) {
      fail(Err::kNotSimplicial, "dependent generators in a maximal cone");
    }
  }
}

}  // namespace

BalancingReport check_balancing_serial(const WeightedFan& f) {
  require_pure_simplicial(f);
  BalancingReport report;
  const int d = f.dim();
  if (d == 0) return report;
  const auto& taus = f.cones_of_dim(d - 1);
  report.entries.resize(taus.size());
  for (size_t i = 0; i < taus.size(); ++i) {
    report.entries[i] = balance_at(f, taus[i], f.ambient_rank());
  }
  return report;
}

BalancingReport check_balancing(const WeightedFan& f) {
  require_pure_simplicial(f);
  BalancingReport report;
  const int d = f.dim();
  if (d == 0) return report;
  const auto& taus = f.cones_of_dim(d - 1);
  report.entries.resize(taus.size());
  const int count = static_cast<int>(taus.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    report.entries[i] = balance_at(f, taus[i], f.ambient_rank());
  }
  return report;
}

bool cone_contains(const WeightedFan& f, const Cone& c,
                   const QuotientVector& v) {
  auto sol = solve_nonneg(f.generators_of(c), v.truncated());
  return sol.has_value();
}

bool cone_contains_interior(const WeightedFan& f, const Cone& c,
                            const QuotientVector& v) {
  auto sol = solve_nonneg(f.generators_of(c), v.truncated());
  if (!sol) return false;
  for (const Rat& x : *sol) {
    if (sgn(x) == 0) return false;
  }
  return true;
}

std::optional<Cone> support_contains(const WeightedFan& f,
                                     const QuotientVector& v) {
  // maximal() is sorted by ray list, so the first hit is the
  // lexicographically least container.
  for (const auto& sigma : f.maximal()) {
    if (cone_contains(f, sigma, v)) return sigma;
  }
  return std::nullopt;
}

std::vector<QuotientVector> lineality(const WeightedFan& f) {
  if (f.maximal().empty()) {
    fail(Err::kBadInput, "lineality needs at least one maximal cone");
  }
  const int n = f.ambient_rank();
  IntMat constraints;
  for (const auto& sigma : f.maximal()) {
    auto gens = f.generators_of(sigma);
    if (gens.empty()) {
      // The origin cone spans nothing; lineality collapses to 0.
      IntMat id;
      for (int i = 0; i < n; ++i) {
        IntVec row(n, Int(0));
        row[i] = 1;
        id.push_back(std::move(row));
      }
      for (auto& row : id) constraints.push_back(row);
      continue;
    }
    auto analysis = rank_det_kernel(rows_to_matrix(gens, n));
    for (const auto& w : analysis.kernel) {
      Int lcm(1);
      for (const Rat& x : w) {
        Int den = x.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      }
      IntVec row(n);
      for (int j = 0; j < n; ++j) {
        Rat scaled = w[j] * Rat(lcm);
        row[j] = scaled.get_num();
      }
      constraints.push_back(std::move(row));
    }
  }
  IntMat basis = lattice_kernel(constraints, n);
  std::vector<QuotientVector> out;
  for (const auto& row : basis) {
    std::vector<long long> coords(n + 1, 0);
    for (int j = 0; j < n; ++j) coords[j] = to_ll(row[j]);
    out.push_back(QuotientVector::canonical(std::move(coords)));
  }
  return out;
}

bool cone_membership_general(const std::vector<std::vector<long long>>& gens,
                             const std::vector<long long>& v) {
  bool vzero = true;
  for (long long x : v) {
    if (x != 0) {
      vzero = false;
      break;
    }
  }
  if (vzero) return true;
  // Drop zero generators and deduplicate.
  std::vector<std::vector<long long>> g;
  for (const auto& w : gens) {
    bool z = true;
    for (long long x : w) {
      if (x != 0) {
        z = false;
        break;
      }
    }
    if (!z) g.push_back(w);
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.empty()) return false;
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(g.size());
  const int r = rank_of_rows(g, n);
  // By Caratheodory for cones it suffices to scan independent subsets of
  // full rank.
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (r == 0) return false;
  while (true) {
    std::vector<std::vector<long long>> sub;
    for (int i : idx) sub.push_back(g[i]);
    if (rank_of_rows(sub, n) == r) {
      auto sol = solve_nonneg(sub, v);
      if (sol) return true;
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

namespace {

// Points spanning sigma1 cap sigma2: vertices of the exact LP
// {t >= 0 : G1 a - G2 b = 0, sum t = 1} realized by basic feasible
// solutions.
std::vector<std::vector<Rat>> intersection_points(
    const std::vector<std::vector<long long>>& g1,
    const std::vector<std::vector<long long>>& g2, int n, long long max_work,
    long long& work_used) {
  const int k1 = static_cast<int>(g1.size());
  const int m = k1 + static_cast<int>(g2.size());
  std::vector<std::vector<Rat>> points;
  if (m == 0) return points;
  // Columns: generators of sigma1 then negated generators of sigma2.
  MatrixQ a(n + 1, m, Rat(0));
  for (int j = 0; j < m; ++j) {
    const auto& src = j < k1 ? g1[j] : g2[j - k1];
    const int sign = j < k1 ? 1 : -1;
    for (int i = 0; i < n; ++i) a.at(i, j) = rat_of(sign * src[i]);
    a.at(n, j) = Rat(1);
  }
  // Quick exit: independent columns of [G1 | -G2] force the intersection
  // to the origin.
  {
    MatrixQ top(n, m, Rat(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) top.at(i, j) = a.at(i, j);
    }
    if (rank_det_kernel(top).rank == m) return points;
  }
  const int r = rank_det_kernel(a).rank;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (++work_used > max_work) {
      fail(Err::kEnumerationTooLarge, "fan-property check exceeded work cap");
    }
    // Basic solution on the column subset S when the columns are
    // independent; solve_nonneg_q rejects infeasible and negative ones.
    std::vector<IntVec> cols;
    for (int j = 0; j < r; ++j) {
      IntVec col(n + 1);
      for (int i = 0; i <= n; ++i) col[i] = a.at(i, idx[j]).get_num();
      cols.push_back(std::move(col));
    }
    MatrixQ coeff(n + 1, r, Rat(0));
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i <= n; ++i) coeff.at(i, j) = a.at(i, idx[j]);
    }
    if (rank_det_kernel(coeff).rank == r) {
      std::vector<Rat> rhs(n + 1, Rat(0));
      rhs[n] = Rat(1);
      auto sol = solve_nonneg_q(cols, rhs);
      if (sol) {
        // Point of the intersection, written through the sigma1 part.
        std::vector<Rat> p(n, Rat(0));
        for (int j = 0; j < r; ++j) {
          if (idx[j] >= k1) continue;
          for (int i = 0; i < n; ++i) {
            p[i] += (*sol)[j] * rat_of(g1[idx[j]][i]);
          }
        }
        points.push_back(std::move(p));
      }
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return points;
}

std::string cone_label(const Cone& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.rays.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.rays[i]);
  }
  return s + "}";
}

}  // namespace

FanValidation fan_validate(const WeightedFan& f, long long max_work) {
  FanValidation report;
  const int n = f.ambient_rank();
  // Rays: nonzero, primitive, distinct.
  for (size_t i = 0; i < f.rays().size(); ++i) {
    const auto& r = f.rays()[i];
    if (r.is_zero()) {
      report.violations.push_back(
          {"zero-ray", "ray " + std::to_string(i) + " is the origin"});
      continue;
    }
    if (content_ll(r.truncated()) != 1) {
      report.violations.push_back(
          {"ray-not-primitive", "ray " + std::to_string(i)});
    }
    for (size_t j = i + 1; j < f.rays().size(); ++j) {
      if (f.rays()[j] == r) {
        report.violations.push_back(
            {"duplicate-ray", "rays " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide"});
      }
    }
  }
  // Duplicate maximal cones.
  for (size_t i = 0; i + 1 < f.maximal().size(); ++i) {
    if (f.maximal()[i] == f.maximal()[i + 1]) {
      report.violations.push_back(
          {"duplicate-cone", "maximal cone " + cone_label(f.maximal()[i]) +
                                 " listed more than once"});
    }
  }
  // Weights.
  for (size_t i = 0; i < f.weights().size(); ++i) {
    if (f.weights()[i] < 1) {
      report.violations.push_back(
          {"nonpositive-weight",
           "maximal cone " + cone_label(f.maximal()[i])});
    }
  }
  // Purity and simpliciality of maximal cones.
  const int d = f.dim();
  for (const auto& sigma : f.maximal()) {
    if (sigma.dim() != d) {
      report.violations.push_back({"not-pure", cone_label(sigma)});
    }
    auto gens = f.generators_of(sigma);
    if (rank_of_rows(gens, n) != sigma.dim()) {
      report.violations.push_back({"not-simplicial", cone_label(sigma)});
    }
  }
  if (!report.ok()) return report;  // geometry checks need clean structure
  // Fan property, pairwise.
  long long work_used = 0;
  for (size_t i = 0; i < f.maximal().size(); ++i) {
    for (size_t j = i + 1; j < f.maximal().size(); ++j) {
      const Cone& s1 = f.maximal()[i];
      const Cone& s2 = f.maximal()[j];
      std::vector<int> common;
      std::set_intersection(s1.rays.begin(), s1.rays.end(), s2.rays.begin(),
                            s2.rays.end(), std::back_inserter(common));
      std::vector<IntVec> common_gens;
      for (int ri : common) {
        auto t = f.rays()[ri].truncated();
        IntVec row(n);
        for (int x = 0; x < n; ++x) row[x] = int_of(t[x]);
        common_gens.push_back(std::move(row));
      }
      auto points = intersection_points(f.generators_of(s1),
                                        f.generators_of(s2), n, max_work,
                                        work_used);
      for (const auto& p : points) {
        auto sol = solve_nonneg_q(common_gens, p);
        if (!sol) {
          report.violations.push_back(
              {"fan-property", "cones " + cone_label(s1) + " and " +
                                   cone_label(s2) +
                                   " intersect outside their common face"});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace tropfan
