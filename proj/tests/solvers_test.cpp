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

#include <gtest/gtest.h>

namespace jumpopt {
namespace {

const UnitStep kZero = UnitStep::zero();
const UnitStep kPlus1 = UnitStep::plus(0);
const UnitStep kPlus2 = UnitStep::plus(1);

ExplicitJumpSystem j1() { return ExplicitJumpSystem({{0, 0}, {1, 0}, {3, 0}, {1, 1}, {2, 1}}); }
ExplicitJumpSystem j2() {
  return ExplicitJumpSystem({{0, 0}, {1, 0}, {3, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}});
}
SeparableObjective f1() {
  return SeparableObjective({UnivariateConvex::linear(-2), UnivariateConvex::linear(-1)}, 6);
}
SeparableObjective f2() {
  return SeparableObjective({UnivariateConvex::linear(-3), UnivariateConvex::linear(-2)}, 9);
}

std::vector<IntPoint> path(std::initializer_list<IntPoint> points) { return points; }

TEST(LocalOptimality, Examples) {
  EXPECT_TRUE(is_locally_optimal(j1(), f1(), {3, 0}));
  EXPECT_FALSE(is_locally_optimal(j1(), f1(), {0, 0}));
  EXPECT_TRUE(is_locally_optimal(ExplicitJumpSystem({{5, 5}}), f1(), {5, 5}));
}

TEST(SelectSStar, Examples) {
  EXPECT_EQ(select_s_star(j1(), f1(), {0, 0}), std::vector<UnitStep>{kPlus1});
  EXPECT_EQ(select_s_star(j2(), f2(), {1, 0}), std::vector<UnitStep>{kPlus1});
  EXPECT_EQ(select_s_star(j2(), f2(), {0, 0}), std::vector<UnitStep>{kPlus1});
  EXPECT_THROW(select_s_star(j1(), f1(), {3, 0}), AlreadyOptimal);
}

TEST(Completions, GreedyAndRefined) {
  EXPECT_EQ(improving_completions(j1(), f1(), {0, 0}, kPlus1),
            (std::vector<UnitStep>{kZero, kPlus2}));
  EXPECT_EQ(refined_completions(j1(), f1(), {0, 0}, kPlus1), std::vector<UnitStep>{kZero});
  EXPECT_EQ(refined_completions(j2(), f2(), {1, 0}, kPlus1), std::vector<UnitStep>{kPlus1});
}

TEST(Neighborhood, FirstStepOfRefined2) {
  EXPECT_EQ(neighborhood(j2(), {0, 0}), path({{0, 0}, {0, 1}, {0, 2}, {1, 0}}));
}

TEST(JscGreedy, WorstPolicyFirstStepLeavesDistance) {
  const Trace t = jsc_greedy(j1(), f1(), {0, 0}, TStarPolicy::kWorst);
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps[0].s, kPlus1);
  EXPECT_EQ(t.steps[0].t, kPlus2);
  EXPECT_EQ(t.trajectory(), path({{0, 0}, {1, 1}, {2, 1}, {3, 0}}));
  EXPECT_EQ(t.final_value, Value(0));
}

TEST(JscGreedy, PoliciesAndOptimalStart) {
  EXPECT_EQ(jsc_greedy(j1(), f1(), {0, 0}, TStarPolicy::kFirst).trajectory(),
            path({{0, 0}, {1, 0}, {3, 0}}));
  const Trace done = jsc_greedy(j1(), f1(), {3, 0});
  EXPECT_TRUE(done.steps.empty());
  EXPECT_EQ(done.final_point, (IntPoint{3, 0}));
}

TEST(JscRefinedGreedy, Examples) {
  EXPECT_EQ(jsc_refined_greedy(j1(), f1(), {0, 0}).trajectory(), path({{0, 0}, {1, 0}, {3, 0}}));
  const Trace t = jsc_refined_greedy(j2(), f2(), {0, 0});
  EXPECT_EQ(t.trajectory(), path({{0, 0}, {1, 0}, {3, 0}}));
  EXPECT_EQ(t.steps.size(), 2U);
  EXPECT_TRUE(jsc_refined_greedy(j2(), f2(), {3, 0}).steps.empty());
}

TEST(JscRefinedGreedy2, Examples) {
  const Trace t = jsc_refined_greedy2(j2(), f2(), {0, 0});
  EXPECT_EQ(t.trajectory(), path({{0, 0}, {0, 2}, {1, 2}, {2, 1}, {3, 0}}));
  EXPECT_EQ(t.steps.size(), 4U);
  EXPECT_EQ(jsc_refined_greedy2(j1(), f1(), {0, 0}).trajectory(),
            path({{0, 0}, {1, 1}, {2, 1}, {3, 0}}));
}

TEST(Solve, TraceInvariants) {
  for (Algorithm a : {Algorithm::kGreedy, Algorithm::kRefined, Algorithm::kRefined2}) {
    const Trace t = solve(a, j2(), f2(), {0, 1});
    IntPoint x = t.start;
    for (const TraceStep& st : t.steps) {
      EXPECT_EQ(st.x, x);
      EXPECT_LT(st.f_after, st.f_before);
      x = x + st.s + st.t;
      EXPECT_TRUE(j2().contains(x));
    }
    EXPECT_EQ(x, t.final_point);
  }
}

TEST(Solve, RejectsBadInput) {
  EXPECT_THROW(solve(Algorithm::kGreedy, j1(), f1(), {2, 0}), SolverError);
  const SeparableObjective narrow(
      {UnivariateConvex::table(0, {3, 2, 1, 0}), UnivariateConvex::linear(0)});
  EXPECT_THROW(solve(Algorithm::kRefined, j1(), narrow, {0, 0}), SolverError);
  const SeparableObjective concave(
      {UnivariateConvex::table(-1, {0, 1, 0, 0, 0, 0}), UnivariateConvex::linear(0)});
  EXPECT_THROW(solve(Algorithm::kRefined, j1(), concave, {0, 0}), SolverError);
  SolverOptions all;
  all.tie = TieBreak::kEnumerateAll;
  EXPECT_THROW(solve(Algorithm::kRefined, j1(), f1(), {0, 0}, all), SolverError);
}

TEST(EnumerateTraces, AllGreedyBranchesOnJ1) {
  SolverOptions all{TieBreak::kEnumerateAll, TStarPolicy::kEnumerateAll};
  const TraceSet set = enumerate_traces(Algorithm::kGreedy, j1(), f1(), {0, 0}, all);
  EXPECT_FALSE(set.truncated);
  std::vector<std::vector<IntPoint>> paths;
  for (const Trace& t : set.traces) paths.push_back(t.trajectory());
  EXPECT_EQ(paths.size(), 3U);
  EXPECT_NE(std::find(paths.begin(), paths.end(), path({{0, 0}, {1, 1}, {2, 1}, {3, 0}})),
            paths.end());
  EXPECT_NE(std::find(paths.begin(), paths.end(), path({{0, 0}, {1, 0}, {3, 0}})), paths.end());
}

TEST(EnumerateTraces, CapTruncates) {
  SolverOptions all{TieBreak::kEnumerateAll, TStarPolicy::kEnumerateAll, 1};
  const TraceSet set = enumerate_traces(Algorithm::kGreedy, j1(), f1(), {0, 0}, all);
  EXPECT_TRUE(set.truncated);
  EXPECT_EQ(set.traces.size(), 1U);
}

TEST(Policies, TextRoundTrip) {
  for (Algorithm a : {Algorithm::kGreedy, Algorithm::kRefined, Algorithm::kRefined2}) {
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  for (TStarPolicy p : {TStarPolicy::kBest, TStarPolicy::kWorst, TStarPolicy::kFirst,
                        TStarPolicy::kEnumerateAll}) {
    EXPECT_EQ(parse_tstar_policy(to_string(p)), p);
  }
  EXPECT_EQ(parse_tie_break("all"), TieBreak::kEnumerateAll);
  EXPECT_THROW(parse_algorithm("fastest"), std::invalid_argument);
}

}  // namespace
}  // namespace jumpopt
