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

#include <algorithm>

namespace jumpopt {

UnivariateConvex UnivariateConvex::linear(Value slope, Value intercept) {
  return UnivariateConvex(LinearPiece{slope, intercept});
}

UnivariateConvex UnivariateConvex::quadratic(Value weight, Value center, Value offset) {
  return UnivariateConvex(QuadraticPiece{weight, center, offset});
}

UnivariateConvex UnivariateConvex::table(Coord lo, std::vector<Value> values) {
  if (values.empty()) throw std::invalid_argument("table piece needs at least one value");
  return UnivariateConvex(TablePiece{lo, std::move(values)});
}

Value UnivariateConvex::operator()(Coord v) const {
  return std::visit(
      [v](const auto& p) -> Value {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearPiece>) {
          return p.slope * Value(v) + p.intercept;
        } else if constexpr (std::is_same_v<T, QuadraticPiece>) {
          const Value d = Value(v) - p.center;
          return p.weight * d * d + p.offset;
        } else {
          const auto size = static_cast<Coord>(p.values.size());
          if (v < p.lo || v >= p.lo + size) {
            throw OutOfDomain("table evaluated at " + std::to_string(v) + " outside [" +
                              std::to_string(p.lo) + ", " + std::to_string(p.lo + size - 1) + "]");
          }
          return p.values[static_cast<std::size_t>(v - p.lo)];
        }
      },
      piece_);
}

bool UnivariateConvex::covers(Coord lo, Coord hi) const {
  const auto* t = std::get_if<TablePiece>(&piece_);
  if (t == nullptr) return true;
  return lo >= t->lo && hi < t->lo + static_cast<Coord>(t->values.size());
}

std::optional<Coord> UnivariateConvex::convexity_violation() const {
  if (const auto* q = std::get_if<QuadraticPiece>(&piece_)) {
    if (q->weight < Value(0)) {
      return q->center.num() / q->center.den() - (q->center.num() % q->center.den() < 0 ? 1 : 0);
    }
    return std::nullopt;
  }
  if (const auto* t = std::get_if<TablePiece>(&piece_)) {
    for (std::size_t k = 1; k + 1 < t->values.size(); ++k) {
      if (t->values[k - 1] + t->values[k + 1] < t->values[k] + t->values[k]) {
        return t->lo + static_cast<Coord>(k);
      }
    }
  }
  return std::nullopt;
}

SeparableObjective::SeparableObjective(std::vector<UnivariateConvex> terms, Value constant)
    : terms_(std::move(terms)), constant_(constant) {}

Value SeparableObjective::operator()(const IntPoint& x) const {
  if (x.dimension() != terms_.size()) throw DimensionMismatch(terms_.size(), x.dimension());
  Value total = constant_;
  for (std::size_t i = 0; i < terms_.size(); ++i) total += terms_[i](x[i]);
  return total;
}

bool SeparableObjective::covers_inflated(std::span<const Interval> bbox) const {
  if (bbox.size() != terms_.size()) throw DimensionMismatch(terms_.size(), bbox.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!terms_[i].covers(bbox[i].min - 1, bbox[i].max + 1)) return false;
  }
  return true;
}

std::optional<ConvexityViolation> verify_convexity(const SeparableObjective& f) {
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    if (auto point = f.terms()[i].convexity_violation()) return ConvexityViolation{i, *point};
  }
  return std::nullopt;
}

bool check_exchange_inequality(const SeparableObjective& f, const IntPoint& x, const IntPoint& y,
                               const UnitStep& s) {
  const auto steps = inc(x, y);
  if (s.is_zero() || std::find(steps.begin(), steps.end(), s) == steps.end()) {
    throw std::invalid_argument("exchange inequality needs s in inc(x, y)");
  }
  return f(x) + f(y) >= f(x + s) + f(y - s);
}

bool check_additive_split(const SeparableObjective& f, const IntPoint& x, const UnitStep& s,
                          const UnitStep& t) {
  if (s.is_zero() || t.is_zero() || s.index() == t.index()) {
    throw std::invalid_argument("additive split needs nonzero steps with distinct supports");
  }
  const Value base = f(x);
  return f(x + s + t) - base == (f(x + s) - base) + (f(x + t) - base);
}

SeparableObjective random_objective(ObjectiveKind kind, std::span<const Interval> bbox, Rng& rng,
                                    Coord margin) {
  std::vector<UnivariateConvex> terms;
  terms.reserve(bbox.size());
  for (const Interval& range : bbox) {
    switch (kind) {
      case ObjectiveKind::kLinear:
        terms.push_back(UnivariateConvex::linear(rng.uniform(-4, 4)));
        break;
      case ObjectiveKind::kQuadratic: {
        // Half-integer centers produce both tied and untied neighbours.
        const Value center(rng.uniform(2 * (range.min - 1), 2 * (range.max + 1)), 2);
        terms.push_back(UnivariateConvex::quadratic(rng.uniform(0, 3), center));
        break;
      }
      case ObjectiveKind::kTable: {
        const Coord lo = range.min - margin;
        const Coord hi = range.max + margin;
        std::vector<Value> values;
        Value current = rng.uniform(-5, 5);
        std::int64_t slope = rng.uniform(-6, 2);
        for (Coord v = lo; v <= hi; ++v) {
          values.push_back(current);
          current += Value(slope);
          if (rng.coin(0.6)) slope += rng.uniform(1, 3);
        }
        terms.push_back(UnivariateConvex::table(lo, std::move(values)));
        break;
      }
    }
  }
  return SeparableObjective(std::move(terms), rng.uniform(0, 10));
}

}  // namespace jumpopt
