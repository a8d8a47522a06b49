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

// Integer-lattice primitives: points, unit steps, L1 distance, the
// increment directions between two points, and the region of points that a
// move of one or two unit steps brings strictly closer by the move length.

#ifndef JUMPOPT_GEOMETRY_HPP_
#define JUMPOPT_GEOMETRY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumpopt {

using Coord = std::int64_t;

// Coordinates are validated against this bound wherever points enter from
// outside (files, generators), so sums of a few distances never overflow.
inline constexpr Coord kMaxAbsCoord = 1'000'000'000;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs);
};

class IntPoint {
 public:
  IntPoint() = default;
  explicit IntPoint(std::size_t dimension) : coords_(dimension, 0) {}
  explicit IntPoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  IntPoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t dimension() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  friend bool operator==(const IntPoint&, const IntPoint&) = default;
  // Lexicographic order; this is the scan order used for all deterministic
  // reporting.
  friend auto operator<=>(const IntPoint&, const IntPoint&) = default;

  // "(0,3)"
  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntPoint& p);

struct IntPointHash {
  std::size_t operator()(const IntPoint& p) const noexcept;
};

// Zero, +chi_i, or -chi_i. The index is 0-based internally; text forms use
// 1-based indices ("+1", "-2", "0").
class UnitStep {
 public:
  constexpr UnitStep() = default;
  static constexpr UnitStep zero() { return UnitStep(); }
  static constexpr UnitStep plus(std::size_t index) { return UnitStep(index, +1); }
  static constexpr UnitStep minus(std::size_t index) { return UnitStep(index, -1); }

  constexpr bool is_zero() const { return sign_ == 0; }
  constexpr std::size_t index() const { return index_; }
  constexpr int sign() const { return sign_; }
  constexpr UnitStep negated() const { return is_zero() ? *this : UnitStep(index_, -sign_); }

  // Zero, +chi_1, -chi_1, +chi_2, -chi_2, ... This is the default
  // tie-breaking order of every solver.
  constexpr std::size_t rank() const {
    return is_zero() ? 0 : 2 * index_ + (sign_ > 0 ? 1 : 2);
  }

  friend constexpr bool operator==(const UnitStep&, const UnitStep&) = default;
  friend constexpr std::strong_ordering operator<=>(const UnitStep& a, const UnitStep& b) {
    return a.rank() <=> b.rank();
  }

  std::string to_string() const;
  // Inverse of to_string; throws std::invalid_argument on malformed text.
  static UnitStep parse(const std::string& text);

 private:
  constexpr UnitStep(std::size_t index, int sign) : index_(index), sign_(sign) {}

  std::size_t index_ = 0;
  int sign_ = 0;
};

std::ostream& operator<<(std::ostream& os, const UnitStep& s);

// All 2n nonzero unit steps in rank order.
std::vector<UnitStep> unit_steps(std::size_t dimension);
// Zero followed by the 2n nonzero unit steps.
std::vector<UnitStep> unit_steps_with_zero(std::size_t dimension);

IntPoint operator+(IntPoint x, const UnitStep& s);
IntPoint operator-(IntPoint x, const UnitStep& s);
IntPoint operator-(const IntPoint& x, const IntPoint& y);

// L1 norm of s + t (0, 1, or 2).
int step_sum_norm(const UnitStep& s, const UnitStep& t);

Coord l1_norm(const IntPoint& x);
Coord l1_distance(const IntPoint& x, const IntPoint& y);

// Unit steps from x that reduce the L1 distance to y by one, in rank order.
std::vector<UnitStep> inc(const IntPoint& x, const IntPoint& y);

// Membership of y in the region of points whose L1 distance to x + s + t is
// ||s + t||_1 less than their distance to x. Evaluated with the closed-form
// coordinate conditions rather than by computing distances. Requires
// s + t != 0.
bool in_s_region(const IntPoint& y, const IntPoint& x, const UnitStep& s, const UnitStep& t);

}  // namespace jumpopt

#endif  // JUMPOPT_GEOMETRY_HPP_
