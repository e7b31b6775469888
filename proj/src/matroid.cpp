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

#include "tropfan/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace tropfan {

int popcount_mask(SetMask s) { return std::popcount(s); }

std::vector<int> mask_to_list(SetMask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

SetMask list_to_mask(const std::vector<int>& elems, int n_elements) {
  SetMask s = 0;
  for (int e : elems) {
    if (e < 0 || e >= n_elements) {
      fail(Err::kParameterOutOfRange,
           "element " + std::to_string(e) + " outside ground set");
    }
    s |= SetMask(1) << e;
  }
  return s;
}

bool mask_lex_less(SetMask a, SetMask b) {
  // Ascending element lists compare lexicographically; smallest differing
  // element decides.  {0,3} < {1,2} even though the masks order the other
  // way.
  if (a == b) return false;
  while (a && b) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Matroid Matroid::from_bases(int n_elements, std::vector<SetMask> bases) {
  if (n_elements < 1 || n_elements > kMaxGroundSet) {
    fail(Err::kParameterOutOfRange,
         "ground set size " + std::to_string(n_elements));
  }
  if (bases.empty()) fail(Err::kEmptyBases, "no bases given");
  const SetMask full = (SetMask(1) << n_elements) - 1;
  for (SetMask b : bases) {
    if (b & ~full) {
      fail(Err::kParameterOutOfRange, "basis uses element outside ground set");
    }
  }
  std::sort(bases.begin(), bases.end(), mask_lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  const int r = popcount_mask(bases[0]);
  for (SetMask b : bases) {
    if (popcount_mask(b) != r) {
      fail(Err::kUnequalCardinality, "bases of different sizes");
    }
  }

  std::vector<char> lookup(SetMask(1) << n_elements, 0);
  for (SetMask b : bases) lookup[b] = 1;

  // Basis exchange: for all B1, B2 and x in B1 \ B2 there is y in B2 \ B1
  // with B1 - x + y a basis.
  for (SetMask b1 : bases) {
    for (SetMask b2 : bases) {
      SetMask only1 = b1 & ~b2;
      for (SetMask xs = only1; xs; xs &= xs - 1) {
        SetMask x = xs & (0u - xs);
        bool found = false;
        for (SetMask ys = b2 & ~b1; ys; ys &= ys - 1) {
          SetMask y = ys & (0u - ys);
          if (lookup[(b1 ^ x) | y]) {
            found = true;
            break;
          }
        }
        if (!found) {
          fail(Err::kExchangeAxiomViolation,
               "no exchange for element " +
                   std::to_string(std::countr_zero(x)) + " of basis {" +
                   std::to_string(b1) + "} against {" + std::to_string(b2) +
                   "}");
        }
      }
    }
  }

  SetMask covered = 0;
  for (SetMask b : bases) covered |= b;
  if (covered != full) {
    int loop = std::countr_zero(SetMask(full & ~covered));
    fail(Err::kLoopDetected, "element " + std::to_string(loop) +
                                 " lies in no basis");
  }

  Matroid m;
  m.n_ = n_elements;
  m.rank_ = r;
  m.bases_ = std::move(bases);
  m.basis_lookup_ = std::move(lookup);
  return m;
}

int Matroid::rank_of(SetMask s) const {
  // Greedy: grow an independent subset of s; independence of I is
  // |I| == max over bases of |I inter B| ... instead use the rank formula
  // r(s) = max over bases |B inter s|, valid since every maximal
  // independent subset of s extends to a basis.
  int best = 0;
  for (SetMask b : bases_) {
    best = std::max(best, popcount_mask(b & s));
    if (best == std::min(popcount_mask(s), rank_)) break;
  }
  return best;
}

Flat Matroid::closure_of(SetMask s) const {
  int rs = rank_of(s);
  SetMask cl = s;
  for (int e = 0; e < n_; ++e) {
    SetMask bit = SetMask(1) << e;
    if (cl & bit) continue;
    if (rank_of(s | bit) == rs) cl |= bit;
  }
  return Flat{cl, rs};
}

FlatLattice flats(const Matroid& m) {
  FlatLattice out;
  out.by_rank.resize(m.rank() + 1);
  // Closure of the empty set (loops are excluded at construction, so this
  // is empty; kept general anyway).
  out.by_rank[0].push_back(m.closure_of(0));
  for (int r = 0; r + 1 <= m.rank(); ++r) {
    // Flats of rank r+1: closures of F + e over flats F of rank r; this
    // walks the lattice one level at a time.
    std::vector<Flat> next;
    for (const Flat& f : out.by_rank[r]) {
      for (int e = 0; e < m.n_elements(); ++e) {
        SetMask bit = SetMask(1) << e;
        if (f.elements & bit) continue;
        Flat g = m.closure_of(f.elements | bit);
        if (g.rank == r + 1) next.push_back(g);
      }
    }
    std::sort(next.begin(), next.end(), [](const Flat& a, const Flat& b) {
      return mask_lex_less(a.elements, b.elements);
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.by_rank[r + 1] = std::move(next);
  }
  return out;
}

std::vector<SetMask> circuits(const Matroid& m) {
  // C is a circuit iff C is dependent and every one-element deletion is
  // independent; brute force over subsets is fine at n <= 16.
  std::vector<SetMask> out;
  const SetMask full = m.full_mask();
  for (SetMask s = 1; s <= full; ++s) {
    int sz = popcount_mask(s);
    if (sz > m.rank() + 1) continue;
    if (m.rank_of(s) != sz - 1) continue;  // independent or far from minimal
    bool minimal = true;
    for (SetMask t = s; t; t &= t - 1) {
      SetMask without = s & ~(t & (0u - t));
      if (m.rank_of(without) != sz - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](SetMask a, SetMask b) {
    int pa = popcount_mask(a), pb = popcount_mask(b);
    if (pa != pb) return pa < pb;
    return mask_lex_less(a, b);
  });
  return out;
}

ComponentPartition connected_components(const Matroid& m) {
  // Union elements that share a circuit; leftover singletons are coloops.
  const int n = m.n_elements();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (SetMask c : circuits(m)) {
    auto elems = mask_to_list(c);
    for (size_t i = 1; i < elems.size(); ++i) {
      parent[find(elems[i])] = find(elems[0]);
    }
  }
  std::vector<SetMask> blocks(n, 0);
  for (int e = 0; e < n; ++e) blocks[find(e)] |= SetMask(1) << e;
  ComponentPartition out;
  for (int e = 0; e < n; ++e) {
    if (blocks[e]) out.blocks.push_back(blocks[e]);
  }
  // Root order already follows smallest element ascending.
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](SetMask a, SetMask b) {
              return std::countr_zero(a) < std::countr_zero(b);
            });
  return out;
}

namespace {

void subsets_of_size(int n, int k,
                     const std::function<void(SetMask)>& visit) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    SetMask s = 0;
    for (int i : idx) s |= SetMask(1) << i;
    visit(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Matroid boolean_matroid(int m) {
  if (m < 1 || m > kMaxGroundSet) {
    fail(Err::kParameterOutOfRange, "boolean matroid size " + std::to_string(m));
  }
  return Matroid::from_bases(m, {(SetMask(1) << m) - 1});
}

Matroid uniform_matroid(int r, int m) {
  if (m < 1 || m > kMaxGroundSet || r < 1 || r > m) {
    fail(Err::kParameterOutOfRange,
         "uniform matroid U(" + std::to_string(r) + "," + std::to_string(m) +
             ")");
  }
  std::vector<SetMask> bases;
  subsets_of_size(m, r, [&](SetMask s) { bases.push_back(s); });
  return Matroid::from_bases(m, std::move(bases));
}

Matroid fano() {
  std::vector<char> is_line(1 << 7, 0);
  for (const auto& line : kFanoLines) {
    SetMask s = 0;
    for (int e : line) s |= SetMask(1) << e;
    is_line[s] = 1;
  }
  std::vector<SetMask> bases;
  subsets_of_size(7, 3, [&](SetMask s) {
    if (!is_line[s]) bases.push_back(s);
  });
  return Matroid::from_bases(7, std::move(bases));
}

Matroid non_fano() {
  // Relax one line of the Fano plane to a basis; the choice {2,4,5} matches
  // the arrangement realized over F_3 by the binary-labels matrix.
  const SetMask relaxed = (1u << 2) | (1u << 4) | (1u << 5);
  std::vector<char> is_line(1 << 7, 0);
  for (const auto& line : kFanoLines) {
    SetMask s = 0;
    for (int e : line) s |= SetMask(1) << e;
    if (s != relaxed) is_line[s] = 1;
  }
  std::vector<SetMask> bases;
  subsets_of_size(7, 3, [&](SetMask s) {
    if (!is_line[s]) bases.push_back(s);
  });
  return Matroid::from_bases(7, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.n_elements() + b.n_elements();
  if (n > kMaxGroundSet) {
    fail(Err::kParameterOutOfRange, "direct sum exceeds ground set limit");
  }
  std::vector<SetMask> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (SetMask ba : a.bases()) {
    for (SetMask bb : b.bases()) {
      bases.push_back(ba | (bb << a.n_elements()));
    }
  }
  return Matroid::from_bases(n, std::move(bases));
}

template <typename K>
std::vector<SetMask> column_basis_masks(const Matrix<K>& a) {
  const int d = a.rows();
  const int n = a.cols();
  std::vector<SetMask> out;
  subsets_of_size(n, d, [&](SetMask s) {
    Matrix<K> sub(d, d, zero_like(a.at(0, 0)));
    int j = 0;
    for (int c : mask_to_list(s)) {
      for (int i = 0; i < d; ++i) sub.at(i, j) = a.at(i, c);
      ++j;
    }
    auto det = rank_det_kernel(sub).det;
    if (det && !scalar_is_zero(*det)) out.push_back(s);
  });
  return out;
}

template <typename K>
Matroid column_matroid(const Matrix<K>& a) {
  const int d = a.rows();
  const int n = a.cols();
  if (d < 1 || n < 1 || n > kMaxGroundSet) {
    fail(Err::kParameterOutOfRange, "matrix shape unsupported");
  }
  for (int c = 0; c < n; ++c) {
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      if (!scalar_is_zero(a.at(i, c))) {
        zero = false;
        break;
      }
    }
    if (zero) {
      fail(Err::kLoopColumn, "column " + std::to_string(c) + " is zero");
    }
  }
  if (rank_of_matrix(a) < d) {
    fail(Err::kNotFullRank, "row space has rank below the row count");
  }
  return Matroid::from_bases(n, column_basis_masks(a));
}

template std::vector<SetMask> column_basis_masks<Rat>(const Matrix<Rat>&);
template std::vector<SetMask> column_basis_masks<Fp>(const Matrix<Fp>&);
template Matroid column_matroid<Rat>(const Matrix<Rat>&);
template Matroid column_matroid<Fp>(const Matrix<Fp>&);

std::vector<ZooEntry> standard_zoo() {
  std::vector<ZooEntry> zoo;
  zoo.push_back({"u23", uniform_matroid(2, 3)});
  zoo.push_back({"u24", uniform_matroid(2, 4)});
  zoo.push_back({"boolean3", boolean_matroid(3)});
  zoo.push_back({"boolean4", boolean_matroid(4)});
  zoo.push_back({"fano", fano()});
  zoo.push_back({"non_fano", non_fano()});
  zoo.push_back({"u23_plus_u23",
                 direct_sum(uniform_matroid(2, 3), uniform_matroid(2, 3))});
  return zoo;
}

}  // namespace tropfan
