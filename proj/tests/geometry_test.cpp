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

#include "jumpopt/geometry.hpp"

#include <cstdlib>
#include <stdexcept>

#include <gtest/gtest.h>

namespace jumpopt {
namespace {

const UnitStep kZero = UnitStep::zero();
const UnitStep kPlus1 = UnitStep::plus(0);
const UnitStep kPlus2 = UnitStep::plus(1);
const UnitStep kMinus1 = UnitStep::minus(0);

// Distance identity evaluated directly, independent of the closed form.
bool s_region_by_distance(const IntPoint& y, const IntPoint& x, const UnitStep& s,
                          const UnitStep& t) {
  IntPoint target = x;
  Coord norm = 0;
  std::vector<Coord> delta(x.dimension(), 0);
  for (const UnitStep& u : {s, t}) {
    if (!u.is_zero()) delta[u.index()] += u.sign();
  }
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    target[i] += delta[i];
    norm += std::llabs(delta[i]);
  }
  Coord to_target = 0;
  Coord to_x = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    to_target += std::llabs(y[i] - target[i]);
    to_x += std::llabs(y[i] - x[i]);
  }
  return to_target == to_x - norm;
}

TEST(Geometry, L1Distance) {
  EXPECT_EQ(l1_distance({0, 0}, {3, 0}), 3);
  EXPECT_EQ(l1_distance({1, 1}, {1, 1}), 0);
  EXPECT_EQ(l1_distance({1, 1}, {0, 3}), 3);
  EXPECT_THROW(l1_distance({1, 1}, {1, 1, 1}), DimensionMismatch);
}

TEST(Geometry, IncrementDirections) {
  EXPECT_EQ(inc({0, 0}, {3, 0}), std::vector<UnitStep>{kPlus1});
  EXPECT_TRUE(inc({2, 5}, {2, 5}).empty());
  EXPECT_EQ(inc({1, 1}, {0, 3}), (std::vector<UnitStep>{kMinus1, kPlus2}));
}

TEST(Geometry, IncrementReducesDistanceByOne) {
  for (Coord a = -2; a <= 2; ++a) {
    for (Coord b = -2; b <= 2; ++b) {
      const IntPoint x{0, 1};
      const IntPoint y{a, b};
      const auto steps = inc(x, y);
      EXPECT_EQ(steps.empty(), x == y);
      for (const UnitStep& s : steps) EXPECT_EQ(l1_distance(x + s, y), l1_distance(x, y) - 1);
    }
  }
}

TEST(Geometry, UnitStepTextAndOrder) {
  EXPECT_EQ(kPlus1.to_string(), "+1");
  EXPECT_EQ(UnitStep::minus(2).to_string(), "-3");
  EXPECT_EQ(kZero.to_string(), "0");
  EXPECT_EQ(UnitStep::parse("-3"), UnitStep::minus(2));
  EXPECT_THROW(UnitStep::parse("+0"), std::invalid_argument);
  EXPECT_THROW(UnitStep::parse("x1"), std::invalid_argument);
  // Default tie-break order: zero, +1, -1, +2, -2.
  EXPECT_LT(kZero, kPlus1);
  EXPECT_LT(kPlus1, kMinus1);
  EXPECT_LT(kMinus1, kPlus2);
  EXPECT_EQ(unit_steps(2).size(), 4U);
  EXPECT_EQ(unit_steps_with_zero(3).front(), kZero);
}

TEST(Geometry, PointText) {
  EXPECT_EQ((IntPoint{0, 3}).to_string(), "(0,3)");
  EXPECT_EQ((IntPoint{-1}).to_string(), "(-1)");
}

TEST(Geometry, SRegionExamples) {
  EXPECT_TRUE(in_s_region({3, 0}, {0, 0}, kPlus1, kZero));
  EXPECT_FALSE(in_s_region({1, 0}, {0, 0}, kPlus1, kPlus2));
  EXPECT_TRUE(in_s_region({3, 0}, {1, 0}, kPlus1, kPlus1));
  EXPECT_FALSE(in_s_region({2, 0}, {1, 0}, kPlus1, kPlus1));
  EXPECT_THROW(in_s_region({0, 0}, {0, 0}, kPlus1, kMinus1), std::invalid_argument);
}

TEST(Geometry, SRegionMatchesDistanceIdentityOnSmallBox) {
  const auto steps = unit_steps_with_zero(2);
  for (Coord x1 = -1; x1 <= 1; ++x1) {
    for (Coord x2 = -1; x2 <= 1; ++x2) {
      const IntPoint x{x1, x2};
      for (const UnitStep& s : steps) {
        for (const UnitStep& t : steps) {
          if (s.is_zero() && t.is_zero()) continue;
          if (!s.is_zero() && s.negated() == t) continue;
          for (Coord y1 = -3; y1 <= 3; ++y1) {
            for (Coord y2 = -3; y2 <= 3; ++y2) {
              const IntPoint y{y1, y2};
              EXPECT_EQ(in_s_region(y, x, s, t), s_region_by_distance(y, x, s, t))
                  << "y=" << y << " x=" << x << " s=" << s << " t=" << t;
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace jumpopt
