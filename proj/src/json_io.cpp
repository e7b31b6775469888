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

#include "tropfan/json_io.hpp"

#include <fstream>

namespace tropfan {

namespace {

Json subset_to_list(SetMask s) {
  Json out = Json::array();
  for (int e : mask_to_list(s)) out.push_back(e);
  return out;
}

SetMask subset_from_list(const Json& j, int n_elements) {
  if (!j.is_array()) fail(Err::kBadInput, "subset must be a list");
  std::vector<int> elems;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(Err::kBadInput, "subset entries must be integers");
    elems.push_back(x.get<int>());
  }
  return list_to_mask(elems, n_elements);
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n_elements"] = m.n_elements();
  j["rank"] = m.rank();
  Json bases = Json::array();
  for (SetMask b : m.bases()) bases.push_back(subset_to_list(b));
  j["bases"] = std::move(bases);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) fail(Err::kBadInput, "matroid document must be an object");
  if (!j.contains("n_elements") || !j["n_elements"].is_number_integer()) {
    fail(Err::kBadInput, "missing integer n_elements");
  }
  const int n = j["n_elements"].get<int>();
  const bool has_bases = j.contains("bases");
  const bool has_nonbases = j.contains("nonbases");
  if (has_bases == has_nonbases) {
    fail(Err::kBadInput, "exactly one of bases/nonbases is required");
  }
  std::vector<SetMask> bases;
  if (has_bases) {
    for (const auto& b : j["bases"]) bases.push_back(subset_from_list(b, n));
  } else {
    if (!j.contains("rank") || !j["rank"].is_number_integer()) {
      fail(Err::kBadInput, "nonbases input needs the rank key");
    }
    const int r = j["rank"].get<int>();
    if (r < 0 || r > n) fail(Err::kBadInput, "rank out of range");
    std::vector<char> excluded(SetMask(1) << n, 0);
    for (const auto& b : j["nonbases"]) {
      excluded[subset_from_list(b, n)] = 1;
    }
    for (SetMask s = 0; s < (SetMask(1) << n); ++s) {
      if (popcount_mask(s) == r && !excluded[s]) bases.push_back(s);
    }
  }
  Matroid m = Matroid::from_bases(n, std::move(bases));
  if (j.contains("rank") && j["rank"].is_number_integer() &&
      j["rank"].get<int>() != m.rank()) {
    fail(Err::kBadInput, "rank key disagrees with the basis cardinality");
  }
  return m;
}

Json fan_to_json(const WeightedFan& f) {
  Json j;
  j["ambient_rank"] = f.ambient_rank();
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(r.c);
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (size_t i = 0; i < f.maximal().size(); ++i) {
    Json c;
    c["rays"] = f.maximal()[i].rays;
    c["weight"] = f.weights()[i];
    cones.push_back(std::move(c));
  }
  j["cones"] = std::move(cones);
  return j;
}

WeightedFan fan_from_json(const Json& j) {
  if (!j.is_object()) fail(Err::kBadInput, "fan document must be an object");
  if (!j.contains("ambient_rank") || !j["ambient_rank"].is_number_integer()) {
    fail(Err::kBadInput, "missing integer ambient_rank");
  }
  const int n = j["ambient_rank"].get<int>();
  if (n < 1) fail(Err::kBadInput, "ambient_rank must be positive");
  std::vector<QuotientVector> rays;
  if (!j.contains("rays") || !j["rays"].is_array()) {
    fail(Err::kBadInput, "missing rays list");
  }
  for (const auto& r : j["rays"]) {
    if (!r.is_array() || static_cast<int>(r.size()) != n + 1) {
      fail(Err::kBadInput, "each ray needs ambient_rank + 1 coordinates");
    }
    std::vector<long long> coords;
    for (const auto& x : r) {
      if (!x.is_number_integer()) fail(Err::kBadInput, "ray coordinates must be integers");
      coords.push_back(x.get<long long>());
    }
    rays.push_back(QuotientVector::canonical(std::move(coords)));
  }
  std::vector<Cone> maximal;
  std::vector<long long> weights;
  if (!j.contains("cones") || !j["cones"].is_array()) {
    fail(Err::kBadInput, "missing cones list");
  }
  for (const auto& c : j["cones"]) {
    if (!c.is_object() || !c.contains("rays")) {
      fail(Err::kBadInput, "each cone needs a rays list");
    }
    Cone cone;
    for (const auto& x : c["rays"]) {
      if (!x.is_number_integer()) fail(Err::kBadInput, "cone ray indices must be integers");
      cone.rays.push_back(x.get<int>());
    }
    long long w = 1;
    if (c.contains("weight")) {
      if (!c["weight"].is_number_integer()) {
        fail(Err::kBadInput, "cone weight must be an integer");
      }
      w = c["weight"].get<long long>();
    }
    maximal.push_back(std::move(cone));
    weights.push_back(w);
  }
  return WeightedFan::from_maximal(n, std::move(rays), std::move(maximal),
                                   std::move(weights));
}

Json bergman_to_json(const BergmanFan& b) {
  Json j = fan_to_json(b.fan);
  Json flats = Json::array();
  for (SetMask f : b.flat_of_ray) flats.push_back(subset_to_list(f));
  j["ray_flats"] = std::move(flats);
  return j;
}

Realization realization_from_json(const Json& j) {
  if (!j.is_object()) fail(Err::kBadInput, "realization document must be an object");
  for (const char* key : {"field", "rows", "cols", "entries"}) {
    if (!j.contains(key)) {
      fail(Err::kBadInput, std::string("missing key ") + key);
    }
  }
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (rows < 1 || cols < 1) fail(Err::kBadInput, "rows/cols must be positive");
  if (!j["entries"].is_array() || static_cast<int>(j["entries"].size()) != rows) {
    fail(Err::kBadInput, "entries must hold one list per row");
  }
  Realization out;
  const Json& field = j["field"];
  if (field.is_string() && field.get<std::string>() == "rational") {
    out.prime = 0;
    MatrixQ a(rows, cols, Rat(0));
    for (int i = 0; i < rows; ++i) {
      const Json& row = j["entries"][i];
      if (static_cast<int>(row.size()) != cols) {
        fail(Err::kBadInput, "row length differs from cols");
      }
      for (int c = 0; c < cols; ++c) {
        const Json& x = row[c];
        if (x.is_number_integer()) {
          a.at(i, c) = rat_of(x.get<long long>());
        } else if (x.is_string()) {
          Rat v;
          if (mpq_set_str(v.get_mpq_t(), x.get<std::string>().c_str(), 10) != 0) {
            fail(Err::kBadInput, "unparsable rational entry");
          }
          v.canonicalize();
          a.at(i, c) = v;
        } else {
          fail(Err::kBadInput, "rational entries must be integers or strings");
        }
      }
    }
    out.rat = std::move(a);
    return out;
  }
  if (!field.is_object() || !field.contains("prime")) {
    fail(Err::kBadInput, "field must be {\"prime\": p} or \"rational\"");
  }
  const long long p = field["prime"].get<long long>();
  PrimeField pf(p);
  out.prime = p;
  MatrixFp a(rows, cols, pf(0));
  for (int i = 0; i < rows; ++i) {
    const Json& row = j["entries"][i];
    if (static_cast<int>(row.size()) != cols) {
      fail(Err::kBadInput, "row length differs from cols");
    }
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) {
        fail(Err::kBadInput, "prime-field entries must be integers");
      }
      a.at(i, c) = pf(row[c].get<long long>());
    }
  }
  out.fp = std::move(a);
  return out;
}

Json realization_to_json(const MatrixFp& a) {
  Json j;
  j["field"] = Json{{"prime", a.at(0, 0).modulus()}};
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(i, c).value());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json realization_to_json(const MatrixQ& a) {
  Json j;
  j["field"] = "rational";
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) {
      const Rat& x = a.at(i, c);
      if (x.get_den() == 1 && x.get_num().fits_slong_p()) {
        row.push_back(x.get_num().get_si());
      } else {
        row.push_back(x.get_str());
      }
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json gauge_class_to_json(const GaugeClass& g) {
  Json j = realization_to_json(g.matrix());
  j["gauge_basis"] = subset_to_list(g.gauge_basis);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::kBadInput, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Err::kBadInput, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tropfan
