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

#include <gtest/gtest.h>

#include "jumpopt/oracle.hpp"
#include "jumpopt/solvers.hpp"

namespace jumpopt {
namespace {

ExplicitJumpSystem j1() { return ExplicitJumpSystem({{0, 0}, {1, 0}, {3, 0}, {1, 1}, {2, 1}}); }
SeparableObjective f1() {
  return SeparableObjective({UnivariateConvex::linear(-2), UnivariateConvex::linear(-1)}, 6);
}

bool same(const SweepReport& a, const SweepReport& b) {
  if (a.points != b.points || a.optimal_points != b.optimal_points ||
      a.greedy_edges != b.greedy_edges || a.refined_edges != b.refined_edges ||
      a.longest_greedy_run != b.longest_greedy_run || a.violations.size() != b.violations.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.violations.size(); ++k) {
    const Violation& u = a.violations[k];
    const Violation& v = b.violations[k];
    if (u.check != v.check || u.x != v.x || u.detail != v.detail) return false;
  }
  return true;
}

TEST(Sweep, ReferenceInstancePasses) {
  const SweepReport r = sweep_instance(j1(), f1());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.points, 5U);
  EXPECT_EQ(r.optimal_points, 1U);
  EXPECT_EQ(r.psi, 4);
  EXPECT_EQ(r.longest_greedy_run, 3U);
}

// Not a jump system: (0,0) is a local minimum of f1 but not a global one.
TEST(Sweep, ReportsViolationsOnNonJumpSystem) {
  const ExplicitJumpSystem gap({{0, 0}, {3, 0}});
  const SweepReport r = sweep_instance(gap, f1());
  ASSERT_FALSE(r.passed());
  const Violation* v = r.find(Check::kLocalOptimality);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->x, (IntPoint{0, 0}));
}

TEST(Sweep, RejectsUncoveredObjective) {
  const SeparableObjective narrow(
      {UnivariateConvex::table(0, {3, 2, 1, 0}), UnivariateConvex::linear(0)});
  EXPECT_THROW(sweep_instance(j1(), narrow), SolverError);
}

TEST(Sweep, SerialAndParallelReportsMatch) {
  GeneratorParams p;
  p.kind = GeneratorKind::kFilteredExplicit;
  p.dimension = 3;
  p.side = 2;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto j = generate_random(p, seed);
    Rng rng(seed);
    const auto f = random_objective(ObjectiveKind::kTable, j.bbox(), rng);
    EXPECT_TRUE(same(sweep_instance(j, f, Execution::kSerial),
                     sweep_instance(j, f, Execution::kParallel)));
  }
  // The gap instance has violations; their reporting must match too.
  const ExplicitJumpSystem gap({{0, 0}, {3, 0}, {0, 3}});
  EXPECT_TRUE(same(sweep_instance(gap, f1(), Execution::kSerial),
                   sweep_instance(gap, f1(), Execution::kParallel)));
}

// The path-length computation must agree with explicit enumeration of every
// run from every start.
TEST(Sweep, LongestRunMatchesTraceEnumeration) {
  const SolverOptions all{TieBreak::kEnumerateAll, TStarPolicy::kEnumerateAll};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GeneratorParams p;
    p.kind = seed % 2 ? GeneratorKind::kGraph : GeneratorKind::kBox;
    p.dimension = 3;
    p.side = 2;
    p.edges = 5;
    const auto j = generate_random(p, seed);
    Rng rng(seed + 100);
    const auto f = random_objective(seed % 3 == 0 ? ObjectiveKind::kLinear : ObjectiveKind::kTable,
                                    j.bbox(), rng);
    std::size_t longest = 0;
    for (const IntPoint& x : j.points()) {
      const TraceSet set = enumerate_traces(Algorithm::kGreedy, j, f, x, all);
      ASSERT_FALSE(set.truncated);
      for (const Trace& t : set.traces) longest = std::max(longest, t.steps.size());
    }
    const SweepReport r = sweep_instance(j, f);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.longest_greedy_run, longest) << "seed " << seed;
  }
}

TEST(Sweep, RefinedRunLengthsWithinDistanceBounds) {
  const SolverOptions all{TieBreak::kEnumerateAll, TStarPolicy::kBest};
  const auto j = box_system({0, 0, 0}, {2, 2, 1});
  Rng rng(77);
  const auto f = random_objective(ObjectiveKind::kQuadratic, j.bbox(), rng);
  const OptimalityProfile profile(j, f);
  for (const IntPoint& x : j.points()) {
    for (const Trace& t : enumerate_traces(Algorithm::kRefined, j, f, x, all).traces) {
      const Coord mu = profile.mu(x);
      EXPECT_GE(static_cast<Coord>(t.steps.size()), (mu + 1) / 2);
      EXPECT_LE(static_cast<Coord>(t.steps.size()), mu);
    }
  }
}

TEST(Sweep, CheckNames) {
  std::vector<std::string> names;
  for (Check c : kAllChecks) names.push_back(to_string(c));
  EXPECT_EQ(names, (std::vector<std::string>{"thm1", "thm2", "thm3", "thm4", "thm5", "cor1",
                                             "cor2"}));
}

}  // namespace
}  // namespace jumpopt
