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

// Set families over a small ground set {0, ..., n-1} stored as bitmasks,
// the symmetric exchange axiom, and linear minimization over delta-matroids.

#ifndef JUMPOPT_DELTA_MATROID_HPP_
#define JUMPOPT_DELTA_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jumpopt/jump_system.hpp"
#include "jumpopt/objective.hpp"
#include "jumpopt/parallel.hpp"
#include "jumpopt/solvers.hpp"

namespace jumpopt {

using SetMask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 16;
inline constexpr std::size_t kMaxEnumeratedGroundSize = 4;

inline SetMask element(std::size_t i) { return SetMask{1} << i; }
inline bool has(SetMask set, std::size_t i) { return (set >> i) & 1U; }

// "{1,3}" with 1-based elements.
std::string set_to_string(SetMask set);

// A nonempty family of subsets; whether it satisfies the exchange axiom is
// a separate question (verify_symmetric_exchange).
class DeltaMatroid {
 public:
  // Throws std::invalid_argument for an empty family, n > kMaxGroundSize, or
  // a member outside the ground set. Duplicates are dropped.
  DeltaMatroid(std::size_t ground_size, std::vector<SetMask> family);

  std::size_t ground_size() const { return ground_size_; }
  // Sorted ascending by mask value.
  std::span<const SetMask> family() const { return family_; }
  bool contains(SetMask set) const { return set < member_.size() && member_[set]; }

 private:
  std::size_t ground_size_;
  std::vector<SetMask> family_;
  std::vector<bool> member_;
};

using Weights = std::vector<Value>;

Value set_cost(std::span<const Value> weights, SetMask set);

struct ExchangeCounterexample {
  SetMask x;
  SetMask y;
  std::size_t i;  // 0-based
  friend bool operator==(const ExchangeCounterexample&, const ExchangeCounterexample&) = default;
};

// For X, Y in the family and i in X ^ Y: X ^ {i} in the family, or some
// j in X ^ Y has X ^ {i, j} in the family. First failure in (X, Y, i) order.
std::optional<ExchangeCounterexample> verify_symmetric_exchange(const DeltaMatroid& family);

// Characteristic vectors as a point set in {0,1}^n.
ExplicitJumpSystem to_jump_system(const DeltaMatroid& family);
IntPoint characteristic_vector(SetMask set, std::size_t ground_size);

// Linear objective sum_i c(i) x(i) matching set_cost on characteristic vectors.
SeparableObjective linear_objective(std::span<const Value> weights);

// Elements sorted by |c| descending, ties by smaller index.
std::vector<std::size_t> greedy_order(std::span<const Value> weights);
// Every ordering with |c| nonincreasing (all permutations of tied blocks).
std::vector<std::vector<std::size_t>> all_greedy_orders(std::span<const Value> weights);

// Greedy construction scanning elements by decreasing |c|: a negative-cost
// element is taken when some member extends the current choice with it; a
// nonnegative one only when no member extends the current choice without it.
SetMask dm_greedy(const DeltaMatroid& family, std::span<const Value> weights);
SetMask dm_greedy(const DeltaMatroid& family, std::span<const Value> weights,
                  std::span<const std::size_t> order);

struct DmMove {
  std::size_t i;
  std::size_t j;  // j == i for a single-element flip
  friend bool operator==(const DmMove&, const DmMove&) = default;
  friend auto operator<=>(const DmMove&, const DmMove&) = default;
};

inline SetMask apply(SetMask set, const DmMove& move) {
  return move.i == move.j ? set ^ element(move.i) : set ^ element(move.i) ^ element(move.j);
}

struct DmStep {
  SetMask before;
  DmMove move;
  Value cost_before;
  Value cost_after;
};

struct DmTrace {
  SetMask start = 0;
  std::vector<DmStep> steps;
  SetMask final_set = 0;
  Value final_cost;
};

// No i, j with F ^ {i, j} feasible and cheaper.
bool dm_is_locally_optimal(const DeltaMatroid& family, std::span<const Value> weights, SetMask set);

// Refined moves at F: i* minimizes c(F ^ {i}) among elements with an
// improving partner; j* = i* when F ^ {i*} is feasible, otherwise the
// feasible partner minimizing c(F ^ {i*, j}). Empty at a local optimum;
// one move under kLex (smallest indices).
std::vector<DmMove> dm_refined_moves(const DeltaMatroid& family, std::span<const Value> weights,
                                     SetMask set, TieBreak tie = TieBreak::kLex);

// Throws std::invalid_argument when start is not in the family.
DmTrace dm_refined_greedy(const DeltaMatroid& family, std::span<const Value> weights,
                          SetMask start);

struct DmTraceSet {
  std::vector<DmTrace> traces;
  bool truncated = false;
};

// Every refined run from start over all tied (i*, j*) choices, depth first
// with moves in lex order; stops after branch_cap traces.
DmTraceSet enumerate_dm_refined_traces(const DeltaMatroid& family, std::span<const Value> weights,
                                       SetMask start, std::size_t branch_cap = 1'000'000);

class DmProfile {
 public:
  DmProfile(const DeltaMatroid& family, std::span<const Value> weights);

  const Value& opt_value() const { return opt_value_; }
  std::span<const SetMask> opt_sets() const { return opt_sets_; }
  bool is_optimal(SetMask set) const;
  std::size_t mu(SetMask set) const;
  std::vector<SetMask> m_star(SetMask set) const;

 private:
  Value opt_value_;
  std::vector<SetMask> opt_sets_;
};

inline std::size_t mu_dm(const DeltaMatroid& family, std::span<const Value> weights, SetMask set) {
  return DmProfile(family, weights).mu(set);
}
inline std::vector<SetMask> m_star_dm(const DeltaMatroid& family, std::span<const Value> weights,
                                      SetMask set) {
  return DmProfile(family, weights).m_star(set);
}

// Distance drop (1 for i* == j*, else 2) and the membership rule: a nearest
// optimum F* of F stays nearest after the move iff F* disagrees with F on
// i* and j*. Returns a description of the first failure.
std::optional<std::string> check_refined_step(const DmProfile& profile, SetMask set,
                                              const DmMove& move);

// Calls visit for every family over {0..n-1} satisfying the exchange axiom,
// in increasing order of the family's membership bitmap. Throws
// std::invalid_argument for n > kMaxEnumeratedGroundSize.
void for_each_delta_matroid(std::size_t ground_size,
                            const std::function<void(const DeltaMatroid&)>& visit,
                            Execution execution = Execution::kParallel);
std::vector<DeltaMatroid> enumerate_delta_matroids(std::size_t ground_size,
                                                   Execution execution = Execution::kParallel);

}  // namespace jumpopt

#endif  // JUMPOPT_DELTA_MATROID_HPP_
