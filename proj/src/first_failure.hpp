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

#ifndef JUMPOPT_SRC_FIRST_FAILURE_HPP_
#define JUMPOPT_SRC_FIRST_FAILURE_HPP_

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "jumpopt/parallel.hpp"

namespace jumpopt::internal {

// body(k) for k in [0, count); iterations must be independent.
template <typename Body>
void parallel_for(std::size_t count, Execution execution, Body body) {
  if (execution == Execution::kSerial) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  const auto signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t sk = 0; sk < signed_count; ++sk) body(static_cast<std::size_t>(sk));
}

// Runs check(k) for k in [0, count) and returns the result of the smallest
// k whose check is non-empty. The parallel path skips indices above the
// best failure found so far, so both paths return the same value.
template <typename Check>
auto first_failure(std::size_t count, Execution execution, Check check)
    -> decltype(check(std::size_t{})) {
  using Result = decltype(check(std::size_t{}));
  if (execution == Execution::kSerial) {
    for (std::size_t k = 0; k < count; ++k) {
      if (Result r = check(k)) return r;
    }
    return Result{};
  }

  std::atomic<std::size_t> first{count};
  std::vector<Result> results(count);
  const auto signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t sk = 0; sk < signed_count; ++sk) {
    const auto k = static_cast<std::size_t>(sk);
    if (k > first.load(std::memory_order_relaxed)) continue;
    results[k] = check(k);
    if (results[k]) {
      std::size_t current = first.load();
      while (k < current && !first.compare_exchange_weak(current, k)) {
      }
    }
  }
  const std::size_t best = first.load();
  return best == count ? Result{} : results[best];
}

}  // namespace jumpopt::internal

#endif  // JUMPOPT_SRC_FIRST_FAILURE_HPP_
