// Copyright 2026 The noisyot Authors
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

#pragma once

#include <string>
#include <vector>

#include "noisyot/entstat.hpp"
#include "noisyot/rng.hpp"

namespace noisyot::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;          // worst observed deviation or margin
  std::string counterexample;  // empty when passed
};

std::vector<CheckResult> run_entropy_suite(std::uint64_t seed);
std::vector<CheckResult> run_appendix_b_suite(std::uint64_t seed);
std::vector<CheckResult> run_pa_suite(std::uint64_t seed);

// Random-state generators shared by the suites and the tests.
DensityMatrix random_pure_qubit(CounterRng& rng);
DensityMatrix random_mixed_state(int dim, CounterRng& rng);
CqState random_binary_qubit_cq(CounterRng& rng);

}  // namespace noisyot::verify
