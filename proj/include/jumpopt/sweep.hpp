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

// Exhaustive verification of one instance over every start point and every
// tie/t* branch.
//
// Rather than enumerating traces (exponential in the number of ties), the
// sweep builds the transition graph of each algorithm: one edge x -> x' per
// admissible (s*, t*) at x. Since f strictly decreases along edges the graph
// is acyclic, and trace-level properties reduce to edge checks plus
// longest/shortest path lengths:
//   - per-step properties (nearest-optimum witnesses, distance drop, the
//     nearest-optimum recursion) are checked on each edge;
//   - monotonicity of f(x + s*) - f(x) is an edge check, because that
//     difference depends only on x (every s* in the argmin has the same
//     f(x + s*));
//   - iteration bounds are longest/shortest path lengths from each start.

#ifndef JUMPOPT_SWEEP_HPP_
#define JUMPOPT_SWEEP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "jumpopt/jump_system.hpp"
#include "jumpopt/objective.hpp"
#include "jumpopt/parallel.hpp"

namespace jumpopt {

enum class Check {
  kLocalOptimality,   // local optimality <=> global optimality
  kGreedyIterationBound,   // greedy iterations <= psi(J)
  kMarginalGainOrder,   // f(x_k + s*_k) - f(x_k) nondecreasing along greedy and refined runs
  kDirectionWitness,   // some nearest optimum lies beyond x in direction s*
  kRegionWitness,   // some nearest optimum lies in the (s*, t*) target region
  kGeodesicStep, // refined steps: distance drop and nearest-optimum recursion
  kRefinedIterationBound, // refined iterations within [ceil(mu/2), mu]
};

inline constexpr Check kAllChecks[] = {Check::kLocalOptimality, Check::kGreedyIterationBound,  Check::kMarginalGainOrder,
                                       Check::kDirectionWitness, Check::kRegionWitness,  Check::kGeodesicStep,
                                       Check::kRefinedIterationBound};

std::string to_string(Check check);  // "thm1" ... "cor2"

struct Violation {
  Check check;
  IntPoint x;          // start point or point where the step is taken
  std::string detail;  // human-readable witness
};

struct SweepReport {
  std::size_t points = 0;
  std::size_t optimal_points = 0;
  std::size_t greedy_edges = 0;
  std::size_t refined_edges = 0;
  Coord psi = 0;
  std::size_t longest_greedy_run = 0;
  // At most one violation per check: the one at the lexicographically
  // smallest point. Identical for both execution modes.
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  const Violation* find(Check check) const;
};

// Requires a convex objective covering the inflated bounding box; throws
// SolverError otherwise.
SweepReport sweep_instance(const ExplicitJumpSystem& system, const SeparableObjective& f,
                           Execution execution = Execution::kParallel);

}  // namespace jumpopt

#endif  // JUMPOPT_SWEEP_HPP_
