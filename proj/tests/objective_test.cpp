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

#include "jumpopt/objective.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

namespace jumpopt {
namespace {

SeparableObjective f1() {
  return SeparableObjective({UnivariateConvex::linear(-2), UnivariateConvex::linear(-1)}, 6);
}
SeparableObjective f2() {
  return SeparableObjective({UnivariateConvex::linear(-3), UnivariateConvex::linear(-2)}, 9);
}

TEST(Objective, Evaluation) {
  EXPECT_EQ(f1()({0, 0}), Value(6));
  EXPECT_EQ(f1()({3, 0}), Value(0));
  EXPECT_EQ(f2()({0, 2}), Value(5));
  EXPECT_EQ(f2()({1, 2}), Value(2));
  const auto q = UnivariateConvex::quadratic(Value(1, 2), Value(3, 2), 1);
  EXPECT_EQ(q(0), Value(17, 8));
  EXPECT_THROW(f1()({0, 0, 0}), DimensionMismatch);
}

TEST(Objective, TableDomain) {
  const auto t = UnivariateConvex::table(-1, {4, 1, 0, 1});
  EXPECT_EQ(t(-1), Value(4));
  EXPECT_EQ(t(2), Value(1));
  EXPECT_THROW(t(3), OutOfDomain);
  EXPECT_TRUE(t.covers(-1, 2));
  EXPECT_FALSE(t.covers(-2, 0));
  const SeparableObjective f({t});
  EXPECT_TRUE(f.covers_inflated(std::vector<Interval>{{0, 1}}));
  EXPECT_FALSE(f.covers_inflated(std::vector<Interval>{{0, 2}}));
}

TEST(Objective, Convexity) {
  EXPECT_FALSE(verify_convexity(f1()).has_value());
  EXPECT_FALSE(UnivariateConvex::quadratic(1, 0).convexity_violation().has_value());
  EXPECT_FALSE(UnivariateConvex::table(0, {3, 1, 0, 0, 2}).convexity_violation().has_value());

  const SeparableObjective bad({UnivariateConvex::linear(1), UnivariateConvex::table(0, {0, 1, 0})});
  const auto v = verify_convexity(bad);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->coordinate, 1U);
  EXPECT_EQ(v->point, 1);
  EXPECT_TRUE(UnivariateConvex::quadratic(-1, 0).convexity_violation().has_value());
}

TEST(Objective, ExchangeInequalityExamples) {
  EXPECT_TRUE(check_exchange_inequality(f1(), {0, 0}, {3, 0}, UnitStep::plus(0)));
  const SeparableObjective sq({UnivariateConvex::quadratic(1, 2)});
  EXPECT_TRUE(check_exchange_inequality(sq, {0}, {4}, UnitStep::plus(0)));
  // s must point from x toward y.
  EXPECT_THROW(check_exchange_inequality(sq, {0}, {4}, UnitStep::minus(0)), std::invalid_argument);
}

TEST(Objective, AdditiveSplitExamples) {
  EXPECT_TRUE(check_additive_split(f1(), {0, 0}, UnitStep::plus(0), UnitStep::plus(1)));
  EXPECT_THROW(check_additive_split(f1(), {0, 0}, UnitStep::plus(0), UnitStep::minus(0)),
               std::invalid_argument);
}

// Both inequalities over random objectives of every kind on a small box.
TEST(Objective, SeparableConvexityPropertiesHold) {
  const std::vector<Interval> box{{-2, 2}, {-2, 2}, {-2, 2}};
  Rng rng(2026);
  for (ObjectiveKind kind : {ObjectiveKind::kLinear, ObjectiveKind::kQuadratic,
                             ObjectiveKind::kTable}) {
    for (int trial = 0; trial < 30; ++trial) {
      const SeparableObjective f = random_objective(kind, box, rng);
      ASSERT_FALSE(verify_convexity(f).has_value());
      ASSERT_TRUE(f.covers_inflated(box));
      for (int sample = 0; sample < 40; ++sample) {
        IntPoint x(3);
        IntPoint y(3);
        for (std::size_t i = 0; i < 3; ++i) {
          x[i] = rng.uniform(-2, 2);
          y[i] = rng.uniform(-2, 2);
        }
        for (const UnitStep& s : inc(x, y)) EXPECT_TRUE(check_exchange_inequality(f, x, y, s));
        for (const UnitStep& s : unit_steps(3)) {
          for (const UnitStep& t : unit_steps(3)) {
            if (s.index() == t.index()) continue;
            EXPECT_TRUE(check_additive_split(f, x, s, t));
          }
        }
      }
    }
  }
}

TEST(Objective, RandomObjectivesAreDeterministic) {
  const std::vector<Interval> box{{0, 3}, {1, 2}};
  Rng a(9);
  Rng b(9);
  const auto fa = random_objective(ObjectiveKind::kTable, box, a);
  const auto fb = random_objective(ObjectiveKind::kTable, box, b);
  for (Coord u = -1; u <= 4; ++u) {
    for (Coord v = 0; v <= 3; ++v) EXPECT_EQ(fa({u, v}), fb({u, v}));
  }
}

}  // namespace
}  // namespace jumpopt
