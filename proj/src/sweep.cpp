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

#include "jumpopt/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "first_failure.hpp"
#include "jumpopt/oracle.hpp"
#include "jumpopt/solvers.hpp"

namespace jumpopt {
namespace {

struct PointResult {
  Value fx;
  bool optimal = false;
  std::optional<Value> s_delta;  // f(x + s*) - f(x) when x is not locally optimal
  std::vector<std::size_t> greedy_next;
  std::vector<std::size_t> refined_next;
  std::vector<Violation> violations;
};

std::string describe(const std::vector<IntPoint>& points) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < points.size(); ++k) os << (k ? "," : "") << points[k];
  os << '}';
  return os.str();
}

std::size_t index_of(std::span<const IntPoint> points, const IntPoint& x) {
  return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) -
                                  points.begin());
}

PointResult examine(const ExplicitJumpSystem& system, const SeparableObjective& f,
                    const OptimalityProfile& profile, std::size_t k) {
  const auto points = system.points();
  const IntPoint& x = points[k];
  PointResult r;
  r.fx = f(x);
  r.optimal = r.fx == profile.opt_value();
  const bool local = is_locally_optimal(system, f, x);
  if (local != r.optimal) {
    r.violations.push_back({Check::kLocalOptimality, x,
                            std::string(local ? "locally optimal" : "not locally optimal") +
                                " with f = " + r.fx.to_string() + ", optimum " +
                                profile.opt_value().to_string()});
  }
  if (local) return r;

  const auto s_candidates = select_s_star(system, f, x);
  r.s_delta = f(x + s_candidates.front()) - r.fx;
  const auto nearest = profile.m_star(x);

  for (const UnitStep& s : s_candidates) {
    const bool witnessed = std::any_of(nearest.begin(), nearest.end(), [&](const IntPoint& y) {
      return in_s_region(y, x, s, UnitStep::zero());
    });
    if (!witnessed) {
      r.violations.push_back({Check::kDirectionWitness, x,
                              "s* = " + s.to_string() + ", M*(x) = " + describe(nearest)});
    }
    for (const UnitStep& t : improving_completions(system, f, x, s)) {
      r.greedy_next.push_back(index_of(points, x + s + t));
    }
  }

  const SolverOptions all{TieBreak::kEnumerateAll, TStarPolicy::kEnumerateAll};
  const Coord mu = profile.mu(x);
  for (const Move& move : candidate_moves(Algorithm::kRefined, system, f, x, all)) {
    const IntPoint next = x + move.s + move.t;
    r.refined_next.push_back(index_of(points, next));
    const std::string step = "s* = " + move.s.to_string() + ", t* = " + move.t.to_string();

    std::vector<IntPoint> restricted;
    for (const IntPoint& y : nearest) {
      if (in_s_region(y, x, move.s, move.t)) restricted.push_back(y);
    }
    if (restricted.empty()) {
      r.violations.push_back({Check::kRegionWitness, x, step + ", M*(x) = " + describe(nearest)});
    }
    const Coord drop = step_sum_norm(move.s, move.t);
    const Coord mu_next = profile.mu(next);
    const auto nearest_next = profile.m_star(next);
    if (mu_next != mu - drop || nearest_next != restricted) {
      r.violations.push_back({Check::kGeodesicStep, x,
                              step + ": mu " + std::to_string(mu) + " -> " +
                                  std::to_string(mu_next) + " (expected drop " +
                                  std::to_string(drop) + "), M*(x') = " + describe(nearest_next) +
                                  ", M*(x) in region = " + describe(restricted)});
    }
  }
  std::sort(r.greedy_next.begin(), r.greedy_next.end());
  r.greedy_next.erase(std::unique(r.greedy_next.begin(), r.greedy_next.end()), r.greedy_next.end());
  return r;
}

}  // namespace

std::string to_string(Check check) {
  switch (check) {
    case Check::kLocalOptimality: return "thm1";
    case Check::kGreedyIterationBound: return "thm2";
    case Check::kMarginalGainOrder: return "thm3";
    case Check::kDirectionWitness: return "thm4";
    case Check::kRegionWitness: return "thm5";
    case Check::kGeodesicStep: return "cor1";
    case Check::kRefinedIterationBound: return "cor2";
  }
  return "?";
}

const Violation* SweepReport::find(Check check) const {
  for (const Violation& v : violations) {
    if (v.check == check) return &v;
  }
  return nullptr;
}

SweepReport sweep_instance(const ExplicitJumpSystem& system, const SeparableObjective& f,
                           Execution execution) {
  if (f.dimension() != system.dimension()) {
    throw SolverError("objective and system dimensions differ");
  }
  if (verify_convexity(f) || !f.covers_inflated(system.bbox())) {
    throw SolverError("objective must be convex and cover the inflated bounding box");
  }
  const OptimalityProfile profile(system, f, execution);
  const auto points = system.points();
  const std::size_t count = points.size();

  std::vector<PointResult> results(count);
  internal::parallel_for(count, execution,
                         [&](std::size_t k) { results[k] = examine(system, f, profile, k); });

  SweepReport report;
  report.points = count;
  report.psi = psi(system);
  std::vector<Violation> found;
  for (std::size_t k = 0; k < count; ++k) {
    const PointResult& r = results[k];
    report.optimal_points += r.optimal ? 1 : 0;
    report.greedy_edges += r.greedy_next.size();
    report.refined_edges += r.refined_next.size();
    found.insert(found.end(), r.violations.begin(), r.violations.end());
    for (const auto* successors : {&r.greedy_next, &r.refined_next}) {
      for (std::size_t j : *successors) {
        const PointResult& next = results[j];
        if (next.s_delta && *next.s_delta < *r.s_delta) {
          found.push_back({Check::kMarginalGainOrder, points[k],
                           "delta " + r.s_delta->to_string() + " at x, then " +
                               next.s_delta->to_string() + " at " + points[j].to_string()});
        }
      }
    }
  }

  // Successors have strictly smaller f, so increasing-f order is a
  // topological order of the reversed graph.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return results[a].fx < results[b].fx; });
  std::vector<std::size_t> greedy_longest(count, 0);
  std::vector<std::size_t> refined_longest(count, 0);
  std::vector<std::size_t> refined_shortest(count, 0);
  for (std::size_t k : order) {
    for (std::size_t j : results[k].greedy_next) {
      greedy_longest[k] = std::max(greedy_longest[k], greedy_longest[j] + 1);
    }
    const auto& next = results[k].refined_next;
    for (std::size_t e = 0; e < next.size(); ++e) {
      const std::size_t j = next[e];
      refined_longest[k] = std::max(refined_longest[k], refined_longest[j] + 1);
      refined_shortest[k] =
          e == 0 ? refined_shortest[j] + 1 : std::min(refined_shortest[k], refined_shortest[j] + 1);
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    report.longest_greedy_run = std::max(report.longest_greedy_run, greedy_longest[k]);
    if (static_cast<Coord>(greedy_longest[k]) > report.psi) {
      found.push_back({Check::kGreedyIterationBound, points[k],
                       "longest greedy run " + std::to_string(greedy_longest[k]) + " > psi " +
                           std::to_string(report.psi)});
    }
    const Coord mu = profile.mu(points[k]);
    const auto lo = static_cast<Coord>(refined_shortest[k]);
    const auto hi = static_cast<Coord>(refined_longest[k]);
    if (lo < (mu + 1) / 2 || hi > mu) {
      found.push_back({Check::kRefinedIterationBound, points[k],
                       "refined runs take " + std::to_string(lo) + ".." + std::to_string(hi) +
                           " steps, mu = " + std::to_string(mu)});
    }
  }

  // First violation per check, by point order.
  std::stable_sort(found.begin(), found.end(), [&](const Violation& a, const Violation& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.x < b.x;
  });
  for (const Violation& v : found) {
    if (report.violations.empty() || report.violations.back().check != v.check) {
      report.violations.push_back(v);
    }
  }
  return report;
}

}  // namespace jumpopt
