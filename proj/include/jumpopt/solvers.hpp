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

// Greedy minimization of a separable convex function over a jump system.
//
// All three algorithms move from x to x + s* + t* with s* a unit step and t*
// a unit step or zero, and stop at a point no such move improves.
//
//   kGreedy    s* minimizes f(x + s) over unit steps that admit some
//              improving t; t* is any improving completion (policy-chosen).
//   kRefined   same s*; t* = 0 whenever x + s* is feasible, otherwise the
//              feasible completion minimizing f(x + s* + t).
//   kRefined2  plain steepest descent over the feasible points within L1
//              distance 2.
//
// The argmins are generally not unique. TieBreak::kLex fixes one branch
// (smallest step rank, see UnitStep::rank); TieBreak::kEnumerateAll explores
// every branch through enumerate_traces().

#ifndef JUMPOPT_SOLVERS_HPP_
#define JUMPOPT_SOLVERS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jumpopt/geometry.hpp"
#include "jumpopt/jump_system.hpp"
#include "jumpopt/objective.hpp"

namespace jumpopt {

enum class Algorithm { kGreedy, kRefined, kRefined2 };
enum class TieBreak { kLex, kEnumerateAll };

// Which improving completion t* the plain greedy takes once s* is fixed.
//   kBest   minimizes f(x + s* + t)
//   kWorst  adversarial: prefers a nonzero t* (the move the refined rule
//           forbids when x + s* is feasible), maximizing f among those
//   kFirst  smallest rank
enum class TStarPolicy { kBest, kWorst, kFirst, kEnumerateAll };

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(TieBreak tie);
std::string_view to_string(TStarPolicy policy);
// Accept the CLI spellings: greedy|refined|refined2, lex|all,
// best|worst|first|all. Throw std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view text);
TieBreak parse_tie_break(std::string_view text);
TStarPolicy parse_tstar_policy(std::string_view text);

class SolverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a descent step is requested at a locally optimal point.
class AlreadyOptimal : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Move {
  UnitStep s;
  UnitStep t;
  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

struct TraceStep {
  IntPoint x;
  UnitStep s;
  UnitStep t;
  Value f_before;
  Value f_after;
  Value f_after_s;  // f(x + s*)
};

struct Trace {
  Algorithm algorithm = Algorithm::kRefined;
  IntPoint start;
  std::vector<TraceStep> steps;
  IntPoint final_point;
  Value final_value;

  std::vector<IntPoint> trajectory() const;
};

struct TraceSet {
  std::vector<Trace> traces;
  bool truncated = false;
};

struct SolverOptions {
  TieBreak tie = TieBreak::kLex;
  TStarPolicy tpolicy = TStarPolicy::kBest;  // greedy only
  std::size_t branch_cap = 1'000'000;        // enumerate_traces only
};

// No s, t in U + {0} with x + s + t in J and f(x + s + t) < f(x). Throws
// SolverError when x is not in J.
bool is_locally_optimal(const JumpSystem& system, const SeparableObjective& f, const IntPoint& x);

// Feasible points within L1 distance 2 of x (x included), sorted.
std::vector<IntPoint> neighborhood(const JumpSystem& system, const IntPoint& x);

// Every unit step s minimizing f(x + s) among those with an improving
// completion, in rank order. Throws AlreadyOptimal when there is none.
std::vector<UnitStep> select_s_star(const JumpSystem& system, const SeparableObjective& f,
                                    const IntPoint& x);

// Every t in U + {0} with x + s + t in J and f(x + s + t) < f(x), rank order.
std::vector<UnitStep> improving_completions(const JumpSystem& system, const SeparableObjective& f,
                                            const IntPoint& x, const UnitStep& s);

// {0} when x + s is feasible; otherwise every t in U minimizing
// f(x + s + t) over feasible x + s + t, in rank order.
std::vector<UnitStep> refined_completions(const JumpSystem& system, const SeparableObjective& f,
                                          const IntPoint& x, const UnitStep& s);

// Canonical split of a difference with L1 norm 1 or 2 into (s, t), s of the
// lower rank; t = 0 for a single unit step.
Move split_difference(const IntPoint& from, const IntPoint& to);

// Moves the algorithm may take at x under the given options, in (s, t)
// rank order. Empty exactly when x is locally optimal. Under kLex (and a
// non-enumerating policy) at most one move is returned.
std::vector<Move> candidate_moves(Algorithm algorithm, const JumpSystem& system,
                                  const SeparableObjective& f, const IntPoint& x,
                                  const SolverOptions& options = {});

// Single run along the first candidate move. Throws SolverError for an
// infeasible start, a non-convex objective, an objective that does not
// cover the inflated bounding box, or an enumerating option.
Trace solve(Algorithm algorithm, const JumpSystem& system, const SeparableObjective& f,
            const IntPoint& start, const SolverOptions& options = {});

Trace jsc_greedy(const JumpSystem& system, const SeparableObjective& f, const IntPoint& start,
                 TStarPolicy tpolicy = TStarPolicy::kBest);
Trace jsc_refined_greedy(const JumpSystem& system, const SeparableObjective& f,
                         const IntPoint& start);
Trace jsc_refined_greedy2(const JumpSystem& system, const SeparableObjective& f,
                          const IntPoint& start);

// Depth-first enumeration of every trace the options allow. Stops after
// options.branch_cap complete traces and reports truncation.
TraceSet enumerate_traces(Algorithm algorithm, const JumpSystem& system,
                          const SeparableObjective& f, const IntPoint& start,
                          const SolverOptions& options);

}  // namespace jumpopt

#endif  // JUMPOPT_SOLVERS_HPP_
