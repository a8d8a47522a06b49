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

#include "jumpopt/oracle.hpp"

#include <algorithm>
#include <limits>

#include "first_failure.hpp"

namespace jumpopt {
namespace {

Coord nearest_distance(std::span<const IntPoint> opt_set, const IntPoint& x) {
  Coord best = std::numeric_limits<Coord>::max();
  for (const IntPoint& y : opt_set) best = std::min(best, l1_distance(x, y));
  return best;
}

}  // namespace

OptimalityProfile::OptimalityProfile(const ExplicitJumpSystem& system, const SeparableObjective& f,
                                     Execution execution) {
  const auto points = system.points();
  std::vector<Value> values(points.size());
  internal::parallel_for(points.size(), execution, [&](std::size_t k) { values[k] = f(points[k]); });
  opt_value_ = *std::min_element(values.begin(), values.end());
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (values[k] == opt_value_) opt_set_.push_back(points[k]);
  }

  std::vector<Coord> distances(points.size());
  internal::parallel_for(points.size(), execution, [&](std::size_t k) {
    distances[k] = nearest_distance(opt_set_, points[k]);
  });
  mu_cache_.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) mu_cache_.emplace(points[k], distances[k]);
}

bool OptimalityProfile::is_optimal(const IntPoint& x) const {
  return std::binary_search(opt_set_.begin(), opt_set_.end(), x);
}

Coord OptimalityProfile::mu(const IntPoint& x) const {
  if (auto it = mu_cache_.find(x); it != mu_cache_.end()) return it->second;
  return nearest_distance(opt_set_, x);
}

std::vector<IntPoint> OptimalityProfile::m_star(const IntPoint& x) const {
  const Coord distance = mu(x);
  std::vector<IntPoint> nearest;
  for (const IntPoint& y : opt_set_) {
    if (l1_distance(x, y) == distance) nearest.push_back(y);
  }
  return nearest;
}

GeodesicReport verify_geodesic_steps(const OptimalityProfile& profile, const Trace& trace) {
  GeodesicReport report;
  report.from_refined = trace.algorithm == Algorithm::kRefined;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const IntPoint next = step.x + step.s + step.t;
    StepCheck check;
    check.index = k;
    check.mu_before = profile.mu(step.x);
    check.mu_after = profile.mu(next);
    check.expected_drop = step_sum_norm(step.s, step.t);
    check.drop_ok = check.mu_after == check.mu_before - check.expected_drop;
    if (check.expected_drop == 0) {
      check.recursion_ok = false;
    } else {
      std::vector<IntPoint> restricted;
      for (const IntPoint& y : profile.m_star(step.x)) {
        if (in_s_region(y, step.x, step.s, step.t)) restricted.push_back(y);
      }
      check.recursion_ok = profile.m_star(next) == restricted;
    }
    if (!check.ok() && !report.first_violation) report.first_violation = k;
    report.steps.push_back(check);
  }
  return report;
}

BoundsCheck verify_bounds(const ExplicitJumpSystem& system, const OptimalityProfile& profile,
                          const Trace& trace) {
  BoundsCheck check;
  check.steps = trace.steps.size();
  switch (trace.algorithm) {
    case Algorithm::kGreedy:
      check.lower = 0;
      check.upper = psi(system);
      break;
    case Algorithm::kRefined: {
      const Coord mu0 = profile.mu(trace.start);
      check.lower = (mu0 + 1) / 2;
      check.upper = mu0;
      break;
    }
    case Algorithm::kRefined2:
      check.applicable = false;
      break;
  }
  return check;
}

std::optional<std::size_t> verify_monotone(const Trace& trace) {
  for (std::size_t k = 0; k + 1 < trace.steps.size(); ++k) {
    const TraceStep& a = trace.steps[k];
    const TraceStep& b = trace.steps[k + 1];
    if (a.f_after_s - a.f_before > b.f_after_s - b.f_before) return k;
  }
  return std::nullopt;
}

std::optional<std::string> check_trace_invariants(const JumpSystem& system,
                                                  const SeparableObjective& f,
                                                  const Trace& trace) {
  IntPoint x = trace.start;
  if (!system.contains(x)) return "start " + x.to_string() + " is not in the system";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + ": ";
    if (step.x != x) return where + "recorded point " + step.x.to_string() + " != " + x.to_string();
    const IntPoint next = x + step.s + step.t;
    if (!system.contains(next)) return where + next.to_string() + " is not in the system";
    if (step.f_before != f(x) || step.f_after != f(next) || step.f_after_s != f(x + step.s)) {
      return where + "recorded objective values do not match";
    }
    if (!(step.f_after < step.f_before)) return where + "objective does not strictly decrease";
    x = next;
  }
  if (x != trace.final_point) return "final point " + trace.final_point.to_string() + " != " + x.to_string();
  if (trace.final_value != f(x)) return "final value does not match";
  return std::nullopt;
}

std::optional<LocalOptimalityCounterexample> verify_local_optimality(const ExplicitJumpSystem& system,
                                                      const SeparableObjective& f,
                                                      const OptimalityProfile& profile,
                                                      Execution execution) {
  const auto points = system.points();
  return internal::first_failure(
      points.size(), execution, [&](std::size_t k) -> std::optional<LocalOptimalityCounterexample> {
        const IntPoint& x = points[k];
        const bool local = is_locally_optimal(system, f, x);
        const Value value = f(x);
        if (local != (value == profile.opt_value())) return LocalOptimalityCounterexample{x, local, value};
        return std::nullopt;
      });
}

std::optional<DirectionCounterexample> verify_direction_witness(const ExplicitJumpSystem& system,
                                                      const SeparableObjective& f,
                                                      const OptimalityProfile& profile,
                                                      Execution execution) {
  const auto points = system.points();
  return internal::first_failure(
      points.size(), execution, [&](std::size_t k) -> std::optional<DirectionCounterexample> {
        const IntPoint& x = points[k];
        if (profile.is_optimal(x)) return std::nullopt;
        const auto nearest = profile.m_star(x);
        std::vector<UnitStep> s_candidates;
        try {
          s_candidates = select_s_star(system, f, x);
        } catch (const AlreadyOptimal&) {
          return std::nullopt;  // a local-optimality failure, reported by verify_local_optimality
        }
        for (const UnitStep& s : s_candidates) {
          const bool witnessed = std::any_of(nearest.begin(), nearest.end(), [&](const IntPoint& y) {
            return in_s_region(y, x, s, UnitStep::zero());
          });
          if (!witnessed) return DirectionCounterexample{x, s};
        }
        return std::nullopt;
      });
}

std::optional<RegionCounterexample> verify_region_witness(const ExplicitJumpSystem& system,
                                                      const SeparableObjective& f,
                                                      const OptimalityProfile& profile,
                                                      Execution execution) {
  const auto points = system.points();
  const SolverOptions all{TieBreak::kEnumerateAll, TStarPolicy::kEnumerateAll};
  return internal::first_failure(
      points.size(), execution, [&](std::size_t k) -> std::optional<RegionCounterexample> {
        const IntPoint& x = points[k];
        if (profile.is_optimal(x)) return std::nullopt;
        const auto nearest = profile.m_star(x);
        for (const Move& move : candidate_moves(Algorithm::kRefined, system, f, x, all)) {
          const bool witnessed = std::any_of(nearest.begin(), nearest.end(), [&](const IntPoint& y) {
            return in_s_region(y, x, move.s, move.t);
          });
          if (!witnessed) return RegionCounterexample{x, move.s, move.t};
        }
        return std::nullopt;
      });
}

}  // namespace jumpopt
