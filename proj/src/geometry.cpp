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
#include <sstream>

namespace jumpopt {
namespace {

void require_same_dimension(const IntPoint& x, const IntPoint& y) {
  if (x.dimension() != y.dimension()) throw DimensionMismatch(x.dimension(), y.dimension());
}

void require_in_range(const UnitStep& s, std::size_t dimension) {
  if (!s.is_zero() && s.index() >= dimension) {
    throw std::out_of_range("unit step " + s.to_string() + " outside dimension " +
                            std::to_string(dimension));
  }
}

// y(i) <= x(i) - k for a minus step, y(i) >= x(i) + k for a plus step.
bool beyond(const IntPoint& y, const IntPoint& x, const UnitStep& s, Coord k) {
  const std::size_t i = s.index();
  return s.sign() > 0 ? y[i] >= x[i] + k : y[i] <= x[i] - k;
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

std::string IntPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoint& p) { return os << p.to_string(); }

std::size_t IntPointHash::operator()(const IntPoint& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Coord c : p.coords()) {
    h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string UnitStep::to_string() const {
  if (is_zero()) return "0";
  return (sign_ > 0 ? "+" : "-") + std::to_string(index_ + 1);
}

UnitStep UnitStep::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) {
    throw std::invalid_argument("malformed unit step: '" + text + "'");
  }
  std::size_t consumed = 0;
  long long index = 0;
  try {
    index = std::stoll(text.substr(1), &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed unit step: '" + text + "'");
  }
  if (consumed != text.size() - 1 || index < 1) {
    throw std::invalid_argument("malformed unit step: '" + text + "'");
  }
  const auto i = static_cast<std::size_t>(index - 1);
  return text[0] == '+' ? plus(i) : minus(i);
}

std::ostream& operator<<(std::ostream& os, const UnitStep& s) { return os << s.to_string(); }

std::vector<UnitStep> unit_steps(std::size_t dimension) {
  std::vector<UnitStep> steps;
  steps.reserve(2 * dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    steps.push_back(UnitStep::plus(i));
    steps.push_back(UnitStep::minus(i));
  }
  return steps;
}

std::vector<UnitStep> unit_steps_with_zero(std::size_t dimension) {
  std::vector<UnitStep> steps{UnitStep::zero()};
  const auto rest = unit_steps(dimension);
  steps.insert(steps.end(), rest.begin(), rest.end());
  return steps;
}

IntPoint operator+(IntPoint x, const UnitStep& s) {
  require_in_range(s, x.dimension());
  if (!s.is_zero()) x[s.index()] += s.sign();
  return x;
}

IntPoint operator-(IntPoint x, const UnitStep& s) { return std::move(x) + s.negated(); }

IntPoint operator-(const IntPoint& x, const IntPoint& y) {
  require_same_dimension(x, y);
  IntPoint d(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) d[i] = x[i] - y[i];
  return d;
}

int step_sum_norm(const UnitStep& s, const UnitStep& t) {
  if (s.is_zero()) return t.is_zero() ? 0 : 1;
  if (t.is_zero()) return 1;
  if (s.index() == t.index()) return s.sign() == t.sign() ? 2 : 0;
  return 2;
}

Coord l1_norm(const IntPoint& x) {
  Coord total = 0;
  for (Coord c : x.coords()) total += std::llabs(c);
  return total;
}

Coord l1_distance(const IntPoint& x, const IntPoint& y) {
  require_same_dimension(x, y);
  Coord total = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) total += std::llabs(x[i] - y[i]);
  return total;
}

std::vector<UnitStep> inc(const IntPoint& x, const IntPoint& y) {
  require_same_dimension(x, y);
  std::vector<UnitStep> steps;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (y[i] > x[i]) steps.push_back(UnitStep::plus(i));
    if (y[i] < x[i]) steps.push_back(UnitStep::minus(i));
  }
  return steps;
}

bool in_s_region(const IntPoint& y, const IntPoint& x, const UnitStep& s, const UnitStep& t) {
  require_same_dimension(x, y);
  require_in_range(s, x.dimension());
  require_in_range(t, x.dimension());
  if (step_sum_norm(s, t) == 0) throw std::invalid_argument("s + t must be nonzero");

  if (s.is_zero()) return beyond(y, x, t, 1);
  if (t.is_zero()) return beyond(y, x, s, 1);
  if (s == t) return beyond(y, x, s, 2);
  return beyond(y, x, s, 1) && beyond(y, x, t, 1);
}

}  // namespace jumpopt
