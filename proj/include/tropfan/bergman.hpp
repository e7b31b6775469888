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

// Bergman fans: the weighted fan of flag cones of a loopless matroid, with
// unit weights.  Rays are indicator vectors of proper nonempty flats; a
// k-dimensional cone is a k-step flag of such flats.

#pragma once

#include <vector>

#include "tropfan/fan.hpp"
#include "tropfan/matroid.hpp"

namespace tropfan {

struct BergmanFan {
  WeightedFan fan;
  // Sidecar: flat_of_ray[i] is the flat whose indicator vector is ray i.
  std::vector<SetMask> flat_of_ray;
};

// Throws RankZero for rank-1 matroids (no proper nonempty flats).
BergmanFan bergman_fan(const Matroid& m);

// Support membership by the circuit criterion: v lies in the support iff
// for every circuit C the minimum of v over C is attained at least twice.
bool circuit_membership(const Matroid& m, const QuotientVector& v);
bool circuit_membership(const std::vector<SetMask>& circuit_list,
                        const QuotientVector& v);

struct LinealityLattice {
  std::vector<QuotientVector> component_vectors;  // one per component
  std::vector<QuotientVector> basis;              // all but the last block
};

// Lineality of the Bergman fan: spanned by indicator vectors of the
// connected components (which sum to zero in the quotient).
LinealityLattice component_lattice(const Matroid& m);

struct DegreeOneEntry {
  std::vector<int> boolean_flag;    // chain of subsets of the basis, as masks
  Cone predicted;                   // flag of closures in the Bergman fan
  int preimages = 0;                // maximal cones whose image captures the witness
  bool unique = false;
  bool unimodular = false;
};

struct DegreeOneReport {
  bool ok = false;
  std::vector<int> basis_order;     // basis elements then the rest, ascending
  std::vector<DegreeOneEntry> entries;  // one per Boolean maximal flag
};

// Verifies that projection along a basis B maps the Bergman fan to the
// Boolean fan on B with degree one: each maximal Boolean cone has a unique
// maximal preimage cone (the flag of closures) and the projection is
// unimodular on it.  Throws NotABasis when B is not a basis.
DegreeOneReport verify_degree_one(const Matroid& m, SetMask basis);
DegreeOneReport verify_degree_one_serial(const Matroid& m, SetMask basis);

}  // namespace tropfan
