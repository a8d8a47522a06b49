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

#ifndef JUMPOPT_OBJECTIVE_HPP_
#define JUMPOPT_OBJECTIVE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "jumpopt/geometry.hpp"
#include "jumpopt/jump_system.hpp"
#include "jumpopt/rational.hpp"
#include "jumpopt/rng.hpp"

namespace jumpopt {

using Value = Rational;

class OutOfDomain : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// slope * v + intercept
struct LinearPiece {
  Value slope;
  Value intercept;
};

// weight * (v - center)^2 + offset, weight >= 0
struct QuadraticPiece {
  Value weight;
  Value center;
  Value offset;
};

// values[k] at v = lo + k; undefined outside [lo, lo + values.size()).
struct TablePiece {
  Coord lo = 0;
  std::vector<Value> values;
};

class UnivariateConvex {
 public:
  using Piece = std::variant<LinearPiece, QuadraticPiece, TablePiece>;

  static UnivariateConvex linear(Value slope, Value intercept = 0);
  static UnivariateConvex quadratic(Value weight, Value center, Value offset = 0);
  static UnivariateConvex table(Coord lo, std::vector<Value> values);

  // Throws OutOfDomain for table pieces evaluated outside their range.
  Value operator()(Coord v) const;

  // Table pieces: [lo, lo + size - 1]. Other pieces cover every integer.
  bool covers(Coord lo, Coord hi) const;

  // First table point k with values(k-1) + values(k+1) < 2 values(k), or a
  // negative quadratic weight (reported at the center's floor).
  std::optional<Coord> convexity_violation() const;

  const Piece& piece() const { return piece_; }

 private:
  explicit UnivariateConvex(Piece piece) : piece_(std::move(piece)) {}
  Piece piece_;
};

struct ConvexityViolation {
  std::size_t coordinate;  // 0-based
  Coord point;
};

class SeparableObjective {
 public:
  SeparableObjective(std::vector<UnivariateConvex> terms, Value constant = 0);

  std::size_t dimension() const { return terms_.size(); }
  std::span<const UnivariateConvex> terms() const { return terms_; }
  const Value& constant() const { return constant_; }

  // constant + sum_i f_i(x(i)). Throws DimensionMismatch or OutOfDomain.
  Value operator()(const IntPoint& x) const;

  // True when every term is defined on [min - 1, max + 1] of the given box.
  bool covers_inflated(std::span<const Interval> bbox) const;

 private:
  std::vector<UnivariateConvex> terms_;
  Value constant_;
};

std::optional<ConvexityViolation> verify_convexity(const SeparableObjective& f);

// f(x) + f(y) >= f(x + s) + f(y - s). Requires s in inc(x, y); throws
// std::invalid_argument otherwise.
bool check_exchange_inequality(const SeparableObjective& f, const IntPoint& x, const IntPoint& y,
                               const UnitStep& s);

// f(x + s + t) - f(x) == (f(x + s) - f(x)) + (f(x + t) - f(x)). Requires s
// and t to be nonzero with distinct supports.
bool check_additive_split(const SeparableObjective& f, const IntPoint& x, const UnitStep& s,
                          const UnitStep& t);

// ---- random objectives for corpus generation ------------------------------

enum class ObjectiveKind { kLinear, kQuadratic, kTable };

// Random integer-valued convex objective whose every term covers the
// bounding box inflated by `margin`.
SeparableObjective random_objective(ObjectiveKind kind, std::span<const Interval> bbox, Rng& rng,
                                    Coord margin = 1);

}  // namespace jumpopt

#endif  // JUMPOPT_OBJECTIVE_HPP_
