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

// Times the OpenMP kernels against their serial reference twins and checks
// that both produce identical results.  Wall-clock only; run on a quiet
// machine for meaningful ratios.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "tropfan/bergman.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/realization.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& body) {
  const auto t0 = Clock::now();
  body();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms,
         bool agree) {
  std::printf("%-32s %10.1f ms %10.1f ms %6.2fx %s\n", name.c_str(), serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              agree ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  using namespace tropfan;

  std::printf("%-32s %13s %13s %7s\n", "kernel", "serial", "parallel",
              "ratio");

  {
    const Matroid m = uniform_matroid(4, 8);
    const WeightedFan f = bergman_fan(m).fan;
    BalancingReport a, b;
    const double ts = time_ms([&] { a = check_balancing_serial(f); });
    const double tp = time_ms([&] { b = check_balancing(f); });
    bool agree = a.entries.size() == b.entries.size();
    for (size_t i = 0; agree && i < a.entries.size(); ++i) {
      agree = a.entries[i].tau == b.entries[i].tau &&
              a.entries[i].balanced == b.entries[i].balanced;
    }
    row("balancing uniform(4,8)", ts, tp, agree && a.all_balanced());
  }

  {
    const Matroid m = fano();
    DegreeOneReport a, b;
    const SetMask basis = m.bases().front();
    const double ts = time_ms([&] { a = verify_degree_one_serial(m, basis); });
    const double tp = time_ms([&] { b = verify_degree_one(m, basis); });
    const bool agree = a.ok && b.ok && a.entries.size() == b.entries.size();
    row("degree-one fano", ts, tp, agree);
  }

  {
    const Matroid m = fano();
    std::vector<GaugeClass> a, b;
    const double ts = time_ms([&] { a = search_realizations_serial(m, 5); });
    const double tp = time_ms([&] { b = search_realizations(m, 5); });
    row("search fano p=5", ts, tp, a == b && a.empty());
  }

  {
    const Matroid m = non_fano();
    std::vector<GaugeClass> a, b;
    const double ts = time_ms([&] { a = search_realizations_serial(m, 7); });
    const double tp = time_ms([&] { b = search_realizations(m, 7); });
    row("search non_fano p=7", ts, tp, a == b);
  }

  {
    const Matroid m = uniform_matroid(2, 4);
    unsigned long long a = 0, b = 0;
    const double ts =
        time_ms([&] { a = count_tropical_realizations_serial(m, 11); });
    const double tp = time_ms([&] { b = count_tropical_realizations(m, 11); });
    row("count uniform(2,4) q=11", ts, tp, a == b);
  }

  {
    const Matroid m = fano();
    unsigned long long a = 0, b = 0;
    const double ts =
        time_ms([&] { a = count_tropical_realizations_serial(m, 2); });
    const double tp = time_ms([&] { b = count_tropical_realizations(m, 2); });
    row("count fano q=2", ts, tp, a == b && a == 1);
  }

  return 0;
}
