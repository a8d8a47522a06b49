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

// Serial against OpenMP timings for the two heaviest kernels.

#include <benchmark/benchmark.h>

#include "jumpopt/jump_system.hpp"
#include "jumpopt/objective.hpp"
#include "jumpopt/sweep.hpp"

namespace jumpopt {
namespace {

ExplicitJumpSystem cube(Coord side) {
  return box_system(IntPoint{0, 0, 0}, IntPoint{side, side, side});
}

void BM_Jexc(benchmark::State& state, Execution execution) {
  const ExplicitJumpSystem j = cube(static_cast<Coord>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_jexc(j, execution));
  state.counters["points"] = static_cast<double>(j.size());
}

void BM_Sweep(benchmark::State& state, Execution execution) {
  const ExplicitJumpSystem j = cube(static_cast<Coord>(state.range(0)));
  Rng rng(7);
  const SeparableObjective f = random_objective(ObjectiveKind::kQuadratic, j.bbox(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_instance(j, f, execution));
  state.counters["points"] = static_cast<double>(j.size());
}

BENCHMARK_CAPTURE(BM_Jexc, serial, Execution::kSerial)->DenseRange(2, 6, 2);
BENCHMARK_CAPTURE(BM_Jexc, parallel, Execution::kParallel)->DenseRange(2, 6, 2);
BENCHMARK_CAPTURE(BM_Sweep, serial, Execution::kSerial)->DenseRange(2, 6, 2);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Execution::kParallel)->DenseRange(2, 6, 2);

}  // namespace
}  // namespace jumpopt

BENCHMARK_MAIN();
