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

#include "jumpopt/solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace jumpopt {
namespace {

void require_member(const JumpSystem& system, const IntPoint& x) {
  if (!system.contains(x)) throw SolverError("point " + x.to_string() + " is not in the system");
}

// Keeps the elements of `steps` whose key is extremal; only the first one
// unless every tie is wanted.
template <typename Key, typename Better>
std::vector<UnitStep> extremal(const std::vector<UnitStep>& steps, Key key, Better better,
                               bool keep_ties) {
  std::vector<UnitStep> chosen;
  std::optional<Value> best;
  for (const UnitStep& t : steps) {
    const Value k = key(t);
    if (!best || better(k, *best)) {
      best = k;
      chosen.assign(1, t);
    } else if (k == *best && keep_ties) {
      chosen.push_back(t);
    }
  }
  return chosen;
}

void validate_run(const JumpSystem& system, const SeparableObjective& f, const IntPoint& start) {
  if (f.dimension() != system.dimension()) {
    throw SolverError("objective dimension " + std::to_string(f.dimension()) +
                      " does not match system dimension " + std::to_string(system.dimension()));
  }
  if (start.dimension() != system.dimension()) {
    throw SolverError("start point " + start.to_string() + " has the wrong dimension");
  }
  require_member(system, start);
  if (auto bad = verify_convexity(f)) {
    throw SolverError("objective term " + std::to_string(bad->coordinate + 1) +
                      " is not convex at " + std::to_string(bad->point));
  }
  if (!f.covers_inflated(system.bounding_box())) {
    throw SolverError("objective does not cover the bounding box inflated by one");
  }
}

TraceStep make_step(const SeparableObjective& f, const IntPoint& x, const Value& fx,
                    const Move& move) {
  const IntPoint next = x + move.s + move.t;
  return TraceStep{x, move.s, move.t, fx, f(next), f(x + move.s)};
}

void finish(Trace& trace, const SeparableObjective& f, IntPoint x) {
  trace.final_value = f(x);
  trace.final_point = std::move(x);
}

void enumerate_from(Algorithm algorithm, const JumpSystem& system, const SeparableObjective& f,
                    const SolverOptions& options, Trace& partial, const IntPoint& x,
                    TraceSet& out) {
  if (out.truncated) return;
  const auto moves = candidate_moves(algorithm, system, f, x, options);
  if (moves.empty()) {
    if (out.traces.size() >= options.branch_cap) {
      out.truncated = true;
      return;
    }
    Trace done = partial;
    finish(done, f, x);
    out.traces.push_back(std::move(done));
    return;
  }
  const Value fx = f(x);
  for (const Move& move : moves) {
    partial.steps.push_back(make_step(f, x, fx, move));
    enumerate_from(algorithm, system, f, options, partial, x + move.s + move.t, out);
    partial.steps.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kRefined: return "refined";
    case Algorithm::kRefined2: return "refined2";
  }
  return "?";
}

std::string_view to_string(TieBreak tie) {
  return tie == TieBreak::kLex ? "lex" : "all";
}

std::string_view to_string(TStarPolicy policy) {
  switch (policy) {
    case TStarPolicy::kBest: return "best";
    case TStarPolicy::kWorst: return "worst";
    case TStarPolicy::kFirst: return "first";
    case TStarPolicy::kEnumerateAll: return "all";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "greedy") return Algorithm::kGreedy;
  if (text == "refined") return Algorithm::kRefined;
  if (text == "refined2") return Algorithm::kRefined2;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

TieBreak parse_tie_break(std::string_view text) {
  if (text == "lex") return TieBreak::kLex;
  if (text == "all") return TieBreak::kEnumerateAll;
  throw std::invalid_argument("unknown tie-break '" + std::string(text) + "'");
}

TStarPolicy parse_tstar_policy(std::string_view text) {
  if (text == "best") return TStarPolicy::kBest;
  if (text == "worst") return TStarPolicy::kWorst;
  if (text == "first") return TStarPolicy::kFirst;
  if (text == "all") return TStarPolicy::kEnumerateAll;
  throw std::invalid_argument("unknown t* policy '" + std::string(text) + "'");
}

std::vector<IntPoint> Trace::trajectory() const {
  std::vector<IntPoint> points{start};
  for (const TraceStep& step : steps) points.push_back(step.x + step.s + step.t);
  return points;
}

bool is_locally_optimal(const JumpSystem& system, const SeparableObjective& f, const IntPoint& x) {
  require_member(system, x);
  const Value fx = f(x);
  for (const IntPoint& y : neighborhood(system, x)) {
    if (f(y) < fx) return false;
  }
  return true;
}

std::vector<IntPoint> neighborhood(const JumpSystem& system, const IntPoint& x) {
  std::set<IntPoint> found;
  const auto steps = unit_steps_with_zero(x.dimension());
  for (const UnitStep& s : steps) {
    const IntPoint xs = x + s;
    for (const UnitStep& t : steps) {
      IntPoint y = xs + t;
      if (system.contains(y)) found.insert(std::move(y));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<UnitStep> improving_completions(const JumpSystem& system, const SeparableObjective& f,
                                            const IntPoint& x, const UnitStep& s) {
  const Value fx = f(x);
  const IntPoint xs = x + s;
  std::vector<UnitStep> completions;
  for (const UnitStep& t : unit_steps_with_zero(x.dimension())) {
    const IntPoint y = xs + t;
    if (system.contains(y) && f(y) < fx) completions.push_back(t);
  }
  return completions;
}

std::vector<UnitStep> select_s_star(const JumpSystem& system, const SeparableObjective& f,
                                    const IntPoint& x) {
  require_member(system, x);
  std::vector<UnitStep> admissible;
  for (const UnitStep& s : unit_steps(x.dimension())) {
    if (!improving_completions(system, f, x, s).empty()) admissible.push_back(s);
  }
  if (admissible.empty()) throw AlreadyOptimal(x.to_string() + " is locally optimal");
  return extremal(
      admissible, [&](const UnitStep& s) { return f(x + s); },
      [](const Value& a, const Value& b) { return a < b; }, true);
}

std::vector<UnitStep> refined_completions(const JumpSystem& system, const SeparableObjective& f,
                                          const IntPoint& x, const UnitStep& s) {
  const IntPoint xs = x + s;
  if (system.contains(xs)) return {UnitStep::zero()};
  std::vector<UnitStep> feasible;
  for (const UnitStep& t : unit_steps(x.dimension())) {
    if (system.contains(xs + t)) feasible.push_back(t);
  }
  return extremal(
      feasible, [&](const UnitStep& t) { return f(xs + t); },
      [](const Value& a, const Value& b) { return a < b; }, true);
}

Move split_difference(const IntPoint& from, const IntPoint& to) {
  const auto steps = inc(from, to);
  const Coord distance = l1_distance(from, to);
  if (distance == 1) return Move{steps.front(), UnitStep::zero()};
  if (distance == 2 && steps.size() == 2) return Move{steps[0], steps[1]};
  if (distance == 2 && steps.size() == 1) return Move{steps[0], steps[0]};
  throw std::invalid_argument("points " + from.to_string() + " and " + to.to_string() +
                              " are not one or two unit steps apart");
}

std::vector<Move> candidate_moves(Algorithm algorithm, const JumpSystem& system,
                                  const SeparableObjective& f, const IntPoint& x,
                                  const SolverOptions& options) {
  require_member(system, x);
  const bool all_ties = options.tie == TieBreak::kEnumerateAll;
  std::vector<Move> moves;

  if (algorithm == Algorithm::kRefined2) {
    const Value fx = f(x);
    std::optional<Value> best;
    for (const IntPoint& y : neighborhood(system, x)) {
      const Value fy = f(y);
      if (fy >= fx) continue;
      if (!best || fy < *best) {
        best = fy;
        moves.assign(1, split_difference(x, y));
      } else if (fy == *best) {
        moves.push_back(split_difference(x, y));
      }
    }
    std::sort(moves.begin(), moves.end());
    if (!all_ties && moves.size() > 1) moves.resize(1);
    return moves;
  }

  std::vector<UnitStep> s_candidates;
  try {
    s_candidates = select_s_star(system, f, x);
  } catch (const AlreadyOptimal&) {
    return moves;
  }
  if (!all_ties) s_candidates.resize(1);

  for (const UnitStep& s : s_candidates) {
    const IntPoint xs = x + s;
    std::vector<UnitStep> completions;
    if (algorithm == Algorithm::kRefined) {
      completions = refined_completions(system, f, x, s);
      if (!all_ties) completions.resize(1);
    } else {
      auto valid = improving_completions(system, f, x, s);
      auto value_at = [&](const UnitStep& t) { return f(xs + t); };
      switch (options.tpolicy) {
        case TStarPolicy::kBest:
          completions = extremal(valid, value_at, std::less<>{}, all_ties);
          break;
        case TStarPolicy::kWorst: {
          std::vector<UnitStep> nonzero;
          std::copy_if(valid.begin(), valid.end(), std::back_inserter(nonzero),
                       [](const UnitStep& t) { return !t.is_zero(); });
          completions = extremal(nonzero.empty() ? valid : nonzero, value_at, std::greater<>{},
                                 all_ties);
          break;
        }
        case TStarPolicy::kFirst:
          completions.assign(1, valid.front());
          break;
        case TStarPolicy::kEnumerateAll:
          completions = std::move(valid);
          break;
      }
    }
    for (const UnitStep& t : completions) moves.push_back(Move{s, t});
  }
  return moves;
}

Trace solve(Algorithm algorithm, const JumpSystem& system, const SeparableObjective& f,
            const IntPoint& start, const SolverOptions& options) {
  if (options.tie == TieBreak::kEnumerateAll ||
      (algorithm == Algorithm::kGreedy && options.tpolicy == TStarPolicy::kEnumerateAll)) {
    throw SolverError("enumerating options need enumerate_traces");
  }
  validate_run(system, f, start);
  Trace trace;
  trace.algorithm = algorithm;
  trace.start = start;
  IntPoint x = start;
  while (true) {
    const auto moves = candidate_moves(algorithm, system, f, x, options);
    if (moves.empty()) break;
    trace.steps.push_back(make_step(f, x, f(x), moves.front()));
    x = x + moves.front().s + moves.front().t;
  }
  finish(trace, f, std::move(x));
  return trace;
}

Trace jsc_greedy(const JumpSystem& system, const SeparableObjective& f, const IntPoint& start,
                 TStarPolicy tpolicy) {
  return solve(Algorithm::kGreedy, system, f, start, SolverOptions{TieBreak::kLex, tpolicy});
}

Trace jsc_refined_greedy(const JumpSystem& system, const SeparableObjective& f,
                         const IntPoint& start) {
  return solve(Algorithm::kRefined, system, f, start);
}

Trace jsc_refined_greedy2(const JumpSystem& system, const SeparableObjective& f,
                          const IntPoint& start) {
  return solve(Algorithm::kRefined2, system, f, start);
}

TraceSet enumerate_traces(Algorithm algorithm, const JumpSystem& system,
                          const SeparableObjective& f, const IntPoint& start,
                          const SolverOptions& options) {
  validate_run(system, f, start);
  TraceSet out;
  Trace partial;
  partial.algorithm = algorithm;
  partial.start = start;
  enumerate_from(algorithm, system, f, options, partial, start, out);
  return out;
}

}  // namespace jumpopt
