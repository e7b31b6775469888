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

// Matroids on ground sets of at most 16 elements, represented through their
// bases as bitmasks.  Everything downstream (fans, realization counting)
// consumes this type.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tropfan/exactalg.hpp"

namespace tropfan {

using SetMask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

int popcount_mask(SetMask s);
std::vector<int> mask_to_list(SetMask s);
SetMask list_to_mask(const std::vector<int>& elems, int n_elements);

// Compare subsets as ascending element lists ({0,3} before {1,2}).
bool mask_lex_less(SetMask a, SetMask b);

struct Flat {
  SetMask elements = 0;
  int rank = 0;
  bool operator==(const Flat& o) const {
    return elements == o.elements && rank == o.rank;
  }
};

class Matroid {
 public:
  // Validates the basis system: nonempty, equal cardinality, exchange axiom,
  // no loops (every element covered by some basis).
  static Matroid from_bases(int n_elements, std::vector<SetMask> bases);

  int n_elements() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<SetMask>& bases() const { return bases_; }
  bool is_basis(SetMask s) const { return basis_lookup_[s]; }
  const std::vector<char>& basis_lookup() const { return basis_lookup_; }

  int rank_of(SetMask s) const;
  Flat closure_of(SetMask s) const;

  SetMask full_mask() const { return (SetMask(1) << n_) - 1; }

 private:
  Matroid() = default;
  int n_ = 0;
  int rank_ = 0;
  std::vector<SetMask> bases_;        // sorted by mask_lex_less
  std::vector<char> basis_lookup_;    // indexed by mask, size 2^n
};

struct FlatLattice {
  // by_rank[r] holds the flats of rank r, each list sorted by mask_lex_less.
  // Rank 0 is the closure of the empty set; the top entry is the full set.
  std::vector<std::vector<Flat>> by_rank;
};

struct ComponentPartition {
  std::vector<SetMask> blocks;  // sorted by smallest element
  int count() const { return static_cast<int>(blocks.size()); }
};

FlatLattice flats(const Matroid& m);
std::vector<SetMask> circuits(const Matroid& m);
ComponentPartition connected_components(const Matroid& m);

Matroid boolean_matroid(int m);
Matroid uniform_matroid(int r, int m);
Matroid fano();
Matroid non_fano();
Matroid direct_sum(const Matroid& a, const Matroid& b);

// The Fano plane with points labeled by the binary expansion of i + 1;
// the lines double as the F_2 arrangement used in tests.
inline constexpr std::array<std::array<int, 3>, 7> kFanoLines = {{
    {0, 1, 2},
    {0, 3, 4},
    {0, 5, 6},
    {1, 3, 5},
    {1, 4, 6},
    {2, 3, 6},
    {2, 4, 5},
}};

// Basis masks of the column matroid, without matroid validation.
template <typename K>
std::vector<SetMask> column_basis_masks(const Matrix<K>& a);

// Matroid of the columns of an exact matrix.  Rejects zero columns
// (LoopColumn) and rank-deficient row spaces (NotFullRank).
template <typename K>
Matroid column_matroid(const Matrix<K>& a);

struct ZooEntry {
  std::string name;
  Matroid matroid;
};

// Small stable of named matroids used by tests and the command line.
std::vector<ZooEntry> standard_zoo();

}  // namespace tropfan
