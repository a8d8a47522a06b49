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

#include "jumpopt/delta_matroid.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "first_failure.hpp"

namespace jumpopt {
namespace {

Value abs_value(const Value& v) { return v < Value(0) ? -v : v; }

void require_weights(const DeltaMatroid& family, std::span<const Value> weights) {
  if (weights.size() != family.ground_size()) {
    throw DimensionMismatch(family.ground_size(), weights.size());
  }
}

// Some member G with G restricted to `prefix` equal to `chosen`.
bool extendable(const DeltaMatroid& family, SetMask prefix, SetMask chosen) {
  return std::any_of(family.family().begin(), family.family().end(),
                     [&](SetMask g) { return (g & prefix) == chosen; });
}

}  // namespace

std::string set_to_string(SetMask set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!has(set, i)) continue;
    os << (first ? "" : ",") << i + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

DeltaMatroid::DeltaMatroid(std::size_t ground_size, std::vector<SetMask> family)
    : ground_size_(ground_size) {
  if (ground_size_ > kMaxGroundSize) {
    throw std::invalid_argument("ground set larger than " + std::to_string(kMaxGroundSize));
  }
  if (family.empty()) throw std::invalid_argument("set family must be nonempty");
  const SetMask universe = static_cast<SetMask>((std::uint64_t{1} << ground_size_) - 1);
  for (SetMask set : family) {
    if ((set & ~universe) != 0) {
      throw std::invalid_argument("member " + set_to_string(set) + " outside the ground set");
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  family_ = std::move(family);
  member_.assign(std::size_t{1} << ground_size_, false);
  for (SetMask set : family_) member_[set] = true;
}

Value set_cost(std::span<const Value> weights, SetMask set) {
  Value total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (has(set, i)) total += weights[i];
  }
  return total;
}

std::optional<ExchangeCounterexample> verify_symmetric_exchange(const DeltaMatroid& family) {
  for (SetMask x : family.family()) {
    for (SetMask y : family.family()) {
      const SetMask diff = x ^ y;
      for (std::size_t i = 0; i < family.ground_size(); ++i) {
        if (!has(diff, i) || family.contains(x ^ element(i))) continue;
        bool repaired = false;
        for (std::size_t j = 0; j < family.ground_size() && !repaired; ++j) {
          repaired = j != i && has(diff, j) && family.contains(x ^ element(i) ^ element(j));
        }
        if (!repaired) return ExchangeCounterexample{x, y, i};
      }
    }
  }
  return std::nullopt;
}

IntPoint characteristic_vector(SetMask set, std::size_t ground_size) {
  IntPoint p(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) p[i] = has(set, i) ? 1 : 0;
  return p;
}

ExplicitJumpSystem to_jump_system(const DeltaMatroid& family) {
  std::vector<IntPoint> points;
  points.reserve(family.family().size());
  for (SetMask set : family.family()) {
    points.push_back(characteristic_vector(set, family.ground_size()));
  }
  return ExplicitJumpSystem(std::move(points));
}

SeparableObjective linear_objective(std::span<const Value> weights) {
  std::vector<UnivariateConvex> terms;
  terms.reserve(weights.size());
  for (const Value& c : weights) terms.push_back(UnivariateConvex::linear(c));
  return SeparableObjective(std::move(terms));
}

std::vector<std::size_t> greedy_order(std::span<const Value> weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return abs_value(weights[a]) > abs_value(weights[b]);
  });
  return order;
}

std::vector<std::vector<std::size_t>> all_greedy_orders(std::span<const Value> weights) {
  std::vector<std::size_t> order = greedy_order(weights);
  std::vector<std::vector<std::size_t>> result;
  // Blocks of equal |c| permute independently; next_permutation over each
  // block in turn walks their product like an odometer.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && abs_value(weights[order[end]]) == abs_value(weights[order[begin]])) {
      ++end;
    }
    blocks.emplace_back(begin, end);
    begin = end;
  }
  while (true) {
    result.push_back(order);
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return result;
}

SetMask dm_greedy(const DeltaMatroid& family, std::span<const Value> weights) {
  const auto order = greedy_order(weights);
  return dm_greedy(family, weights, order);
}

SetMask dm_greedy(const DeltaMatroid& family, std::span<const Value> weights,
                  std::span<const std::size_t> order) {
  require_weights(family, weights);
  if (order.size() != family.ground_size()) {
    throw std::invalid_argument("greedy order must list every element once");
  }
  SetMask chosen = 0;
  SetMask prefix = 0;
  for (std::size_t e : order) {
    prefix |= element(e);
    if (weights[e] < Value(0)) {
      if (extendable(family, prefix, chosen | element(e))) chosen |= element(e);
    } else if (!extendable(family, prefix, chosen)) {
      chosen |= element(e);
    }
  }
  return chosen;
}

bool dm_is_locally_optimal(const DeltaMatroid& family, std::span<const Value> weights, SetMask set) {
  require_weights(family, weights);
  const Value cost = set_cost(weights, set);
  const std::size_t n = family.ground_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const SetMask next = apply(set, DmMove{i, j});
      if (family.contains(next) && set_cost(weights, next) < cost) return false;
    }
  }
  return true;
}

std::vector<DmMove> dm_refined_moves(const DeltaMatroid& family, std::span<const Value> weights,
                                     SetMask set, TieBreak tie) {
  require_weights(family, weights);
  const std::size_t n = family.ground_size();
  const Value cost = set_cost(weights, set);
  const bool all_ties = tie == TieBreak::kEnumerateAll;

  std::vector<std::size_t> first_choices;
  std::optional<Value> best_flip;
  for (std::size_t i = 0; i < n; ++i) {
    bool improvable = false;
    for (std::size_t j = 0; j < n && !improvable; ++j) {
      const SetMask next = apply(set, DmMove{i, j});
      improvable = family.contains(next) && set_cost(weights, next) < cost;
    }
    if (!improvable) continue;
    const Value flip = set_cost(weights, set ^ element(i));
    if (!best_flip || flip < *best_flip) {
      best_flip = flip;
      first_choices.assign(1, i);
    } else if (flip == *best_flip) {
      first_choices.push_back(i);
    }
  }
  if (!all_ties && first_choices.size() > 1) first_choices.resize(1);

  std::vector<DmMove> moves;
  for (std::size_t i : first_choices) {
    if (family.contains(set ^ element(i))) {
      moves.push_back(DmMove{i, i});
      continue;
    }
    std::vector<std::size_t> partners;
    std::optional<Value> best;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const SetMask next = apply(set, DmMove{i, j});
      if (!family.contains(next)) continue;
      const Value c = set_cost(weights, next);
      if (!best || c < *best) {
        best = c;
        partners.assign(1, j);
      } else if (c == *best) {
        partners.push_back(j);
      }
    }
    if (!all_ties && partners.size() > 1) partners.resize(1);
    for (std::size_t j : partners) moves.push_back(DmMove{i, j});
  }
  return moves;
}

DmTrace dm_refined_greedy(const DeltaMatroid& family, std::span<const Value> weights,
                          SetMask start) {
  require_weights(family, weights);
  if (!family.contains(start)) {
    throw std::invalid_argument("start set " + set_to_string(start) + " is not feasible");
  }
  DmTrace trace;
  trace.start = start;
  SetMask set = start;
  while (true) {
    const auto moves = dm_refined_moves(family, weights, set);
    if (moves.empty()) break;
    const SetMask next = apply(set, moves.front());
    trace.steps.push_back(
        DmStep{set, moves.front(), set_cost(weights, set), set_cost(weights, next)});
    set = next;
  }
  trace.final_set = set;
  trace.final_cost = set_cost(weights, set);
  return trace;
}

namespace {

void enumerate_dm_from(const DeltaMatroid& family, std::span<const Value> weights,
                       std::size_t cap, DmTrace& partial, SetMask set, DmTraceSet& out) {
  if (out.traces.size() >= cap) {
    out.truncated = true;
    return;
  }
  const auto moves = dm_refined_moves(family, weights, set, TieBreak::kEnumerateAll);
  if (moves.empty()) {
    DmTrace done = partial;
    done.final_set = set;
    done.final_cost = set_cost(weights, set);
    out.traces.push_back(std::move(done));
    return;
  }
  for (const DmMove& move : moves) {
    const SetMask next = apply(set, move);
    partial.steps.push_back(DmStep{set, move, set_cost(weights, set), set_cost(weights, next)});
    enumerate_dm_from(family, weights, cap, partial, next, out);
    partial.steps.pop_back();
  }
}

}  // namespace

DmTraceSet enumerate_dm_refined_traces(const DeltaMatroid& family, std::span<const Value> weights,
                                       SetMask start, std::size_t branch_cap) {
  require_weights(family, weights);
  if (!family.contains(start)) {
    throw std::invalid_argument("start set " + set_to_string(start) + " is not feasible");
  }
  DmTraceSet out;
  DmTrace partial;
  partial.start = start;
  enumerate_dm_from(family, weights, branch_cap, partial, start, out);
  return out;
}

DmProfile::DmProfile(const DeltaMatroid& family, std::span<const Value> weights) {
  require_weights(family, weights);
  bool first = true;
  for (SetMask set : family.family()) {
    const Value c = set_cost(weights, set);
    if (first || c < opt_value_) {
      opt_value_ = c;
      opt_sets_.assign(1, set);
      first = false;
    } else if (c == opt_value_) {
      opt_sets_.push_back(set);
    }
  }
}

bool DmProfile::is_optimal(SetMask set) const {
  return std::binary_search(opt_sets_.begin(), opt_sets_.end(), set);
}

std::size_t DmProfile::mu(SetMask set) const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (SetMask opt : opt_sets_) best = std::min<std::size_t>(best, std::popcount(set ^ opt));
  return best;
}

std::vector<SetMask> DmProfile::m_star(SetMask set) const {
  const std::size_t distance = mu(set);
  std::vector<SetMask> nearest;
  for (SetMask opt : opt_sets_) {
    if (static_cast<std::size_t>(std::popcount(set ^ opt)) == distance) nearest.push_back(opt);
  }
  return nearest;
}

std::optional<std::string> check_refined_step(const DmProfile& profile, SetMask set,
                                              const DmMove& move) {
  const SetMask next = apply(set, move);
  const std::size_t drop = move.i == move.j ? 1 : 2;
  const std::size_t before = profile.mu(set);
  const std::size_t after = profile.mu(next);
  const std::string where = set_to_string(set) + " via (" + std::to_string(move.i + 1) + "," +
                            std::to_string(move.j + 1) + ")";
  if (after + drop != before) {
    return where + ": mu " + std::to_string(before) + " -> " + std::to_string(after) +
           ", expected drop " + std::to_string(drop);
  }
  const auto nearest_next = profile.m_star(next);
  const auto nearest = profile.m_star(set);
  auto disagrees = [&](SetMask opt, std::size_t e) { return has(set, e) != has(opt, e); };
  std::vector<SetMask> kept;
  for (SetMask opt : nearest) {
    const bool rule = disagrees(opt, move.i) && disagrees(opt, move.j);
    const bool actual = std::binary_search(nearest_next.begin(), nearest_next.end(), opt);
    if (rule != actual) {
      return where + ": nearest optimum " + set_to_string(opt) +
             (actual ? " stays nearest but violates" : " satisfies but is dropped by") +
             " the membership rule";
    }
    if (rule) kept.push_back(opt);
  }
  if (kept != nearest_next) {
    return where + ": new nearest optima are not a subset of the old ones";
  }
  return std::nullopt;
}

void for_each_delta_matroid(std::size_t ground_size,
                            const std::function<void(const DeltaMatroid&)>& visit,
                            Execution execution) {
  if (ground_size > kMaxEnumeratedGroundSize) {
    throw std::invalid_argument("enumeration supports ground sets of at most " +
                                std::to_string(kMaxEnumeratedGroundSize) + " elements");
  }
  const std::size_t subsets = std::size_t{1} << ground_size;
  const std::uint64_t bitmaps = (std::uint64_t{1} << subsets) - 1;
  auto family_of = [&](std::uint64_t bitmap) {
    std::vector<SetMask> members;
    for (std::size_t s = 0; s < subsets; ++s) {
      if ((bitmap >> s) & 1U) members.push_back(static_cast<SetMask>(s));
    }
    return DeltaMatroid(ground_size, std::move(members));
  };
  // Bitmap b encodes the family {S : bit S of b is set}; b = 0 is empty.
  std::vector<char> passes(static_cast<std::size_t>(bitmaps));
  internal::parallel_for(static_cast<std::size_t>(bitmaps), execution, [&](std::size_t k) {
    passes[k] = !verify_symmetric_exchange(family_of(k + 1)).has_value();
  });
  for (std::size_t k = 0; k < passes.size(); ++k) {
    if (passes[k]) visit(family_of(k + 1));
  }
}

std::vector<DeltaMatroid> enumerate_delta_matroids(std::size_t ground_size, Execution execution) {
  std::vector<DeltaMatroid> result;
  for_each_delta_matroid(
      ground_size, [&](const DeltaMatroid& d) { result.push_back(d); }, execution);
  return result;
}

}  // namespace jumpopt
