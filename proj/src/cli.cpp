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

#include "tropfan/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropfan/bergman.hpp"
#include "tropfan/errors.hpp"
#include "tropfan/json_io.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/realization.hpp"

namespace tropfan {

namespace {

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(Err::kBadInput, "expected a comma-separated integer list, got " + s);
    }
  }
  if (out.empty()) fail(Err::kBadInput, "empty integer list");
  return out;
}

Json subset_json(SetMask s) {
  Json out = Json::array();
  for (int e : mask_to_list(s)) out.push_back(e);
  return out;
}

long long env_max_work() {
  const char* s = std::getenv("TROPFAN_MAX_WORK");
  if (s == nullptr) return -1;
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != std::strlen(s) || v <= 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Err::kBadInput, "TROPFAN_MAX_WORK must be a positive integer");
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(Err::kBadInput, "cannot write " + path);
  f << text;
}

bool is_axiom_error(Err e) {
  switch (e) {
    case Err::kEmptyBases:
    case Err::kUnequalCardinality:
    case Err::kExchangeAxiomViolation:
    case Err::kLoopDetected:
    case Err::kParameterOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computations with matroid fans"};
  app.name("tropfan");
  app.require_subcommand(1);

  std::string in_path;
  std::string out_file;
  std::string out_dir = ".";
  std::string matroid_path;
  std::string basis_spec = "auto";
  std::string mode_str = "all_classes";
  std::string vector_spec;
  long long p = 0;
  long long q = 0;
  long long max_work = -1;
  unsigned long long seed = 1;

  auto add_common = [&](CLI::App* leaf) {
    leaf->add_option("--seed", seed, "seed for sampled checks");
    leaf->add_option("--max-work", max_work,
                     "work budget before a guard error");
    return leaf;
  };

  auto* matroid_cmd = app.add_subcommand("matroid", "matroid inspection");
  matroid_cmd->require_subcommand(1);
  auto* m_info = add_common(matroid_cmd->add_subcommand(
      "info", "summarize a matroid: rank, flats, circuits, components"));
  m_info->add_option("--in", in_path, "matroid JSON file")->required();
  auto* m_validate = add_common(matroid_cmd->add_subcommand(
      "validate", "check the basis-exchange axiom on the input"));
  m_validate->add_option("--in", in_path, "matroid JSON file")->required();

  auto* fan_cmd = app.add_subcommand("fan", "weighted fan operations");
  fan_cmd->require_subcommand(1);
  auto* f_build = add_common(fan_cmd->add_subcommand(
      "build", "build the matroid fan with unit weights"));
  f_build->add_option("--matroid", matroid_path, "matroid JSON file")
      ->required();
  f_build->add_option("--out", out_file, "fan JSON output path");
  auto* f_validate = add_common(fan_cmd->add_subcommand(
      "validate", "structural and fan-property checks"));
  f_validate->add_option("--in", in_path, "fan JSON file")->required();
  auto* f_balance = add_common(fan_cmd->add_subcommand(
      "balance", "balancing at every codimension-1 cone"));
  f_balance->add_option("--in", in_path, "fan JSON file")->required();
  auto* f_member = add_common(fan_cmd->add_subcommand(
      "member", "membership of a vector in the fan support"));
  f_member->add_option("--in", in_path, "fan JSON file")->required();
  f_member
      ->add_option("--vector", vector_spec,
                   "comma-separated coordinates, one per ground-set element")
      ->required();
  auto* f_lineality = add_common(fan_cmd->add_subcommand(
      "lineality", "lattice basis of the lineality space"));
  f_lineality->add_option("--in", in_path, "fan JSON file")->required();

  auto* bergman_cmd =
      app.add_subcommand("bergman", "matroid-fan specific checks");
  bergman_cmd->require_subcommand(1);
  auto* b_degree = add_common(bergman_cmd->add_subcommand(
      "degree", "degree-one projection onto the Boolean fan of a basis"));
  b_degree->add_option("--matroid", matroid_path, "matroid JSON file")
      ->required();
  b_degree->add_option("--basis", basis_spec,
                       "auto (lex-least basis) or a comma-separated list");

  auto* realize_cmd =
      app.add_subcommand("realize", "realizations over prime fields");
  realize_cmd->require_subcommand(1);
  auto* r_search = add_common(realize_cmd->add_subcommand(
      "search", "gauge-fixed search for realizations over F_p"));
  r_search->add_option("--matroid", matroid_path, "matroid JSON file")
      ->required();
  r_search->add_option("--p", p, "field characteristic")->required();
  r_search->add_option("--mode", mode_str, "first or all_classes")
      ->check(CLI::IsMember({"first", "all_classes"}));
  auto* r_classes = add_common(realize_cmd->add_subcommand(
      "classes", "all torus classes of realizations over F_p"));
  r_classes->add_option("--matroid", matroid_path, "matroid JSON file")
      ->required();
  r_classes->add_option("--p", p, "field characteristic")->required();
  auto* r_count = add_common(realize_cmd->add_subcommand(
      "count", "count subspaces of F_q^n with the given column matroid"));
  r_count->add_option("--matroid", matroid_path, "matroid JSON file")
      ->required();
  r_count->add_option("--q", q, "field size")->required();
  auto* r_torsor = add_common(realize_cmd->add_subcommand(
      "torsor", "two-sided check of the torus-orbit counting identity"));
  r_torsor->add_option("--matroid", matroid_path, "matroid JSON file")
      ->required();
  r_torsor->add_option("--q", q, "field size")->required();

  auto* zoo_cmd = app.add_subcommand("zoo", "built-in example matroids");
  zoo_cmd->require_subcommand(1);
  auto* z_emit = add_common(
      zoo_cmd->add_subcommand("emit", "write every zoo matroid as JSON"));
  z_emit->add_option("--out", out_dir, "output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto resolve_work = [&](long long fallback) {
    if (max_work > 0) return max_work;
    long long env = env_max_work();
    return env > 0 ? env : fallback;
  };

  Json payload;
  std::string status = "pass";
  bool guard = false;
  const auto t0 = std::chrono::steady_clock::now();

  try {
    if (m_info->parsed()) {
      Matroid m = matroid_from_json(load_json_file(in_path));
      payload["n_elements"] = m.n_elements();
      payload["rank"] = m.rank();
      payload["n_bases"] = m.bases().size();
      FlatLattice fl = flats(m);
      Json per_rank = Json::array();
      for (const auto& level : fl.by_rank) per_rank.push_back(level.size());
      payload["flats_per_rank"] = std::move(per_rank);
      payload["n_circuits"] = circuits(m).size();
      ComponentPartition comps = connected_components(m);
      Json blocks = Json::array();
      for (SetMask b : comps.blocks) blocks.push_back(subset_json(b));
      payload["components"] = std::move(blocks);
    } else if (m_validate->parsed()) {
      try {
        Matroid m = matroid_from_json(load_json_file(in_path));
        payload["valid"] = true;
        payload["rank"] = m.rank();
        payload["n_bases"] = m.bases().size();
      } catch (const TropError& e) {
        if (!is_axiom_error(e.code())) throw;
        status = "fail";
        payload["valid"] = false;
        payload["error"] = err_name(e.code());
        payload["detail"] = e.what();
      }
    } else if (f_build->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_path));
      BergmanFan b = bergman_fan(m);
      payload["ambient_rank"] = b.fan.ambient_rank();
      payload["dim"] = b.fan.dim();
      payload["n_rays"] = b.fan.rays().size();
      payload["n_maximal"] = b.fan.maximal().size();
      if (!out_file.empty()) {
        write_text_file(out_file, dump_canonical(bergman_to_json(b)));
        payload["out"] = out_file;
      } else {
        payload["fan"] = bergman_to_json(b);
      }
    } else if (f_validate->parsed()) {
      WeightedFan f = fan_from_json(load_json_file(in_path));
      FanValidation v = fan_validate(f, resolve_work(1000000));
      Json viols = Json::array();
      for (const auto& viol : v.violations) {
        viols.push_back(Json{{"kind", viol.kind}, {"detail", viol.detail}});
      }
      payload["ok"] = v.ok();
      payload["violations"] = std::move(viols);
      if (!v.ok()) status = "fail";
    } else if (f_balance->parsed()) {
      WeightedFan f = fan_from_json(load_json_file(in_path));
      BalancingReport rep = check_balancing(f);
      payload["checked"] = rep.entries.size();
      Json failures = Json::array();
      for (const auto& e : rep.entries) {
        if (e.balanced) continue;
        failures.push_back(
            Json{{"cone", e.tau.rays}, {"residual", e.residual}});
      }
      payload["balanced"] = rep.all_balanced();
      payload["failures"] = std::move(failures);
      if (!rep.all_balanced()) status = "fail";
    } else if (f_member->parsed()) {
      WeightedFan f = fan_from_json(load_json_file(in_path));
      std::vector<long long> coords = parse_ll_list(vector_spec);
      if (static_cast<int>(coords.size()) != f.ambient_rank() + 1) {
        fail(Err::kDimensionMismatch,
             "expected " + std::to_string(f.ambient_rank() + 1) +
                 " coordinates");
      }
      QuotientVector v = QuotientVector::canonical(std::move(coords));
      std::optional<Cone> hit = support_contains(f, v);
      payload["contained"] = hit.has_value();
      payload["cone"] = hit ? Json(hit->rays) : Json(nullptr);
      if (!hit) status = "fail";
    } else if (f_lineality->parsed()) {
      WeightedFan f = fan_from_json(load_json_file(in_path));
      std::vector<QuotientVector> basis = lineality(f);
      payload["rank"] = basis.size();
      Json vecs = Json::array();
      for (const auto& b : basis) vecs.push_back(b.c);
      payload["basis"] = std::move(vecs);
    } else if (b_degree->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_path));
      SetMask b = 0;
      if (basis_spec == "auto") {
        b = m.bases().front();
      } else {
        std::vector<int> elems;
        for (long long x : parse_ll_list(basis_spec)) {
          elems.push_back(static_cast<int>(x));
        }
        b = list_to_mask(elems, m.n_elements());
      }
      DegreeOneReport rep = verify_degree_one(m, b);
      payload["basis"] = subset_json(b);
      payload["flags_checked"] = rep.entries.size();
      Json failures = Json::array();
      for (const auto& e : rep.entries) {
        if (e.unique && e.unimodular) continue;
        Json flag = Json::array();
        for (int mask : e.boolean_flag) {
          flag.push_back(subset_json(static_cast<SetMask>(mask)));
        }
        failures.push_back(Json{{"flag", std::move(flag)},
                                {"preimages", e.preimages},
                                {"unique", e.unique},
                                {"unimodular", e.unimodular}});
      }
      payload["ok"] = rep.ok;
      payload["failures"] = std::move(failures);
      if (!rep.ok) status = "fail";
    } else if (r_search->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_path));
      SearchMode mode =
          mode_str == "first" ? SearchMode::kFirst : SearchMode::kAllClasses;
      std::vector<GaugeClass> classes =
          search_realizations(m, p, mode, resolve_work(kDefaultMaxSearch));
      payload["p"] = p;
      payload["realizable"] = !classes.empty();
      payload["n_classes"] = classes.size();
      if (!classes.empty()) {
        payload["witness"] = gauge_class_to_json(classes.front());
      }
      if (classes.empty()) status = "fail";
    } else if (r_classes->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_path));
      std::vector<GaugeClass> classes = search_realizations(
          m, p, SearchMode::kAllClasses, resolve_work(kDefaultMaxSearch));
      payload["p"] = p;
      payload["count"] = classes.size();
      Json arr = Json::array();
      for (const auto& g : classes) arr.push_back(gauge_class_to_json(g));
      payload["classes"] = std::move(arr);
    } else if (r_count->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_path));
      unsigned long long c = count_tropical_realizations(
          m, q, resolve_work(kDefaultMaxEnumeration));
      payload["q"] = q;
      payload["count"] = c;
    } else if (r_torsor->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_path));
      TorsorCheck t =
          verify_torsor_count(m, q, resolve_work(kDefaultMaxSearch),
                              resolve_work(kDefaultMaxEnumeration));
      payload["q"] = q;
      payload["ok"] = t.ok;
      payload["subspace_count"] = t.subspace_count;
      payload["class_count"] = t.class_count;
      payload["torus_rank"] = t.torus_rank;
      payload["predicted"] = t.predicted.get_str();
      if (!t.ok) status = "fail";
    } else if (z_emit->parsed()) {
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) fail(Err::kBadInput, "cannot create directory " + out_dir);
      Json written = Json::array();
      for (const ZooEntry& e : standard_zoo()) {
        std::filesystem::path path =
            std::filesystem::path(out_dir) / (e.name + ".json");
        write_text_file(path.string(), dump_canonical(matroid_to_json(e.matroid)));
        written.push_back(e.name + ".json");
      }
      payload["dir"] = out_dir;
      payload["written"] = std::move(written);
    }
  } catch (const TropError& e) {
    status = "error";
    guard = is_guard_error(e.code());
    payload = Json{{"error", err_name(e.code())}, {"detail", e.what()}};
  }

  const auto t1 = std::chrono::steady_clock::now();
  const long long ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  Json report;
  report["command"] = args;
  report["elapsed_ms"] = ms;
  report["payload"] = std::move(payload);
  report["status"] = status;
  out << dump_canonical(report);

  if (status == "pass") return 0;
  if (status == "fail") return 1;
  return guard ? 3 : 1;
}

}  // namespace tropfan
