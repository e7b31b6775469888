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

// JSON import/export for the three on-disk schemas (matroid, fan,
// realization).  Emission is canonical: keys sorted, subsets as ascending
// element lists, cone lists sorted, so equal objects serialize identically.

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "tropfan/bergman.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/realization.hpp"

namespace tropfan {

using Json = nlohmann::json;

// {"n_elements": 7, "rank": 3, "bases": [[0,1,3], ...]}
// Input accepts exactly one of "bases" / "nonbases".
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// {"ambient_rank": 6, "rays": [[...n+1 ints...], ...],
//  "cones": [{"rays": [0, 7], "weight": 1}, ...]}    (maximal cones only)
Json fan_to_json(const WeightedFan& f);
WeightedFan fan_from_json(const Json& j);

// Fan plus the ray -> flat sidecar under "ray_flats".
Json bergman_to_json(const BergmanFan& b);

// {"field": {"prime": 2} | "rational", "rows": 3, "cols": 7,
//  "entries": [[...], ...]}   (rational entries may be "a/b" strings)
struct Realization {
  long long prime = 0;  // 0 = rational
  std::optional<MatrixFp> fp;
  std::optional<MatrixQ> rat;
};

Realization realization_from_json(const Json& j);
Json realization_to_json(const MatrixFp& a);
Json realization_to_json(const MatrixQ& a);
Json gauge_class_to_json(const GaugeClass& g);

Json load_json_file(const std::string& path);
std::string dump_canonical(const Json& j);

}  // namespace tropfan
