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

// Brute-force ground truth for small explicit instances: the optimal set,
// distances to the nearest optimum, and checks of the geodesic guarantees
// on single traces.

#ifndef JUMPOPT_ORACLE_HPP_
#define JUMPOPT_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jumpopt/geometry.hpp"
#include "jumpopt/jump_system.hpp"
#include "jumpopt/objective.hpp"
#include "jumpopt/parallel.hpp"
#include "jumpopt/solvers.hpp"

namespace jumpopt {

class OptimalityProfile {
 public:
  // Enumerates the whole system; members' distances are cached.
  OptimalityProfile(const ExplicitJumpSystem& system, const SeparableObjective& f,
                    Execution execution = Execution::kParallel);

  const Value& opt_value() const { return opt_value_; }
  // Sorted.
  std::span<const IntPoint> opt_set() const { return opt_set_; }
  bool is_optimal(const IntPoint& x) const;

  // L1 distance from x to the nearest optimal point (any x, member or not).
  Coord mu(const IntPoint& x) const;
  // Optimal points at distance mu(x), sorted.
  std::vector<IntPoint> m_star(const IntPoint& x) const;

 private:
  Value opt_value_;
  std::vector<IntPoint> opt_set_;
  std::unordered_map<IntPoint, Coord, IntPointHash> mu_cache_;
};

struct StepCheck {
  std::size_t index = 0;
  Coord mu_before = 0;
  Coord mu_after = 0;
  Coord expected_drop = 0;  // ||s* + t*||_1
  bool drop_ok = false;
  bool recursion_ok = false;  // M*(x') == M*(x) restricted to the target region
  bool ok() const { return drop_ok && recursion_ok; }
};

struct GeodesicReport {
  // False when the trace was not produced by the refined algorithm; such
  // traces are still evaluated, but their violations are expected, not bugs.
  bool from_refined = true;
  std::vector<StepCheck> steps;
  std::optional<std::size_t> first_violation;
  bool passed() const { return !first_violation.has_value(); }
};

// Per-step distance drop and nearest-optimum recursion along a trace.
GeodesicReport verify_geodesic_steps(const OptimalityProfile& profile, const Trace& trace);

struct BoundsCheck {
  bool applicable = true;  // false for refined2 traces
  std::size_t steps = 0;
  Coord lower = 0;
  Coord upper = 0;
  bool passed() const {
    return !applicable ||
           (static_cast<Coord>(steps) >= lower && static_cast<Coord>(steps) <= upper);
  }
};

// Greedy: steps <= psi(J). Refined: ceil(mu(x0)/2) <= steps <= mu(x0).
BoundsCheck verify_bounds(const ExplicitJumpSystem& system, const OptimalityProfile& profile,
                          const Trace& trace);

// Index k of the first step with f(x_k + s_k) - f(x_k) >
// f(x_{k+1} + s_{k+1}) - f(x_{k+1}); nullopt when nondecreasing.
std::optional<std::size_t> verify_monotone(const Trace& trace);

// Structural trace invariants: members only, strict decrease, consecutive
// points differ by s* + t*. Returns a description of the first failure.
std::optional<std::string> check_trace_invariants(const JumpSystem& system,
                                                  const SeparableObjective& f,
                                                  const Trace& trace);

struct LocalOptimalityCounterexample {
  IntPoint x;
  bool locally_optimal = false;
  Value value;
};

struct DirectionCounterexample {
  IntPoint x;
  UnitStep s_star;
};

struct RegionCounterexample {
  IntPoint x;
  UnitStep s_star;
  UnitStep t_star;
};

// Local optimality coincides with global optimality at every member.
std::optional<LocalOptimalityCounterexample> verify_local_optimality(const ExplicitJumpSystem& system,
                                                      const SeparableObjective& f,
                                                      const OptimalityProfile& profile,
                                                      Execution execution = Execution::kParallel);

// At every non-optimal x and every s* in the full argmin, some nearest
// optimum lies at least one unit beyond x in the direction of s*.
std::optional<DirectionCounterexample> verify_direction_witness(const ExplicitJumpSystem& system,
                                                      const SeparableObjective& f,
                                                      const OptimalityProfile& profile,
                                                      Execution execution = Execution::kParallel);

// At every non-optimal x and every refined (s*, t*) branch, some nearest
// optimum lies in the target region of (x; s*, t*).
std::optional<RegionCounterexample> verify_region_witness(const ExplicitJumpSystem& system,
                                                      const SeparableObjective& f,
                                                      const OptimalityProfile& profile,
                                                      Execution execution = Execution::kParallel);

}  // namespace jumpopt

#endif  // JUMPOPT_ORACLE_HPP_
