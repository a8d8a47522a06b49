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

#ifndef JUMPOPT_JUMP_SYSTEM_HPP_
#define JUMPOPT_JUMP_SYSTEM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "jumpopt/geometry.hpp"
#include "jumpopt/parallel.hpp"
#include "jumpopt/rng.hpp"

namespace jumpopt {

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  Coord min = 0;
  Coord max = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite set of integer points with a membership test. Solvers only ever
// need contains(); the oracle additionally needs an explicit enumeration.
class JumpSystem {
 public:
  virtual ~JumpSystem() = default;
  virtual std::size_t dimension() const = 0;
  // Throws DimensionMismatch when x has the wrong dimension.
  virtual bool contains(const IntPoint& x) const = 0;
  // Per-coordinate range guaranteed to contain every member.
  virtual std::vector<Interval> bounding_box() const = 0;
};

class ExplicitJumpSystem final : public JumpSystem {
 public:
  // Duplicates are dropped. Throws std::invalid_argument for an empty set,
  // mixed dimensions, or coordinates beyond kMaxAbsCoord. The (J-EXC) axiom
  // is not checked here; see verify_jexc.
  explicit ExplicitJumpSystem(std::vector<IntPoint> points);

  std::size_t dimension() const override { return dimension_; }
  bool contains(const IntPoint& x) const override;
  std::vector<Interval> bounding_box() const override { return bbox_; }

  // Lexicographically sorted.
  std::span<const IntPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::span<const Interval> bbox() const { return bbox_; }

  friend bool operator==(const ExplicitJumpSystem& a, const ExplicitJumpSystem& b) {
    return a.points_ == b.points_;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<IntPoint> points_;
  std::unordered_set<IntPoint, IntPointHash> index_;
  std::vector<Interval> bbox_;
};

// Degree contributed by a loop to its endpoint.
enum class LoopConvention { kCountTwice = 2, kCountOnce = 1 };

struct Edge {
  std::size_t u = 0;  // 0-based vertex indices
  std::size_t v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Degree sequences of all edge subsets of a multigraph.
class GraphDegreeJumpSystem final : public JumpSystem {
 public:
  GraphDegreeJumpSystem(std::size_t vertex_count, std::vector<Edge> edges,
                        LoopConvention loops = LoopConvention::kCountTwice);

  std::size_t dimension() const override { return vertex_count_; }
  // Backtracking over edges with residual-capacity and parity pruning.
  bool contains(const IntPoint& x) const override;
  // [0, weighted degree of v in the full graph] per vertex.
  std::vector<Interval> bounding_box() const override;

  std::size_t vertex_count() const { return vertex_count_; }
  std::span<const Edge> edges() const { return edges_; }
  LoopConvention loop_convention() const { return loops_; }

 private:
  Coord loop_degree() const { return static_cast<Coord>(loops_); }

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  LoopConvention loops_;
};

inline constexpr std::size_t kDefaultMaterializeEdgeLimit = 24;

// Enumerates every edge subset. Throws LimitExceeded above edge_limit edges.
ExplicitJumpSystem materialize(const GraphDegreeJumpSystem& graph,
                               std::size_t edge_limit = kDefaultMaterializeEdgeLimit);

// Witness that (J-EXC) fails: x, y in J, s in inc(x, y), x + s not in J, and
// no t in inc(x + s, y) puts x + s + t back in J.
struct JexcCounterexample {
  IntPoint x;
  IntPoint y;
  UnitStep s;
  friend bool operator==(const JexcCounterexample&, const JexcCounterexample&) = default;
};

// Exhaustive check over all (x, y, s). Returns the first counterexample in
// (x, y, s) lexicographic order, independent of the execution mode.
std::optional<JexcCounterexample> verify_jexc(const ExplicitJumpSystem& system,
                                              Execution execution = Execution::kParallel);

// Sum over coordinates of (max - min) across the system.
Coord psi(const ExplicitJumpSystem& system);

// ---- generators -----------------------------------------------------------

enum class GeneratorKind { kGraph, kBox, kFilteredExplicit };

// Desk-scale limits enforced by generate_random.
inline constexpr std::size_t kMaxGeneratedDimension = 5;
inline constexpr Coord kMaxGeneratedSide = 6;
inline constexpr std::size_t kMaxGeneratedEdges = 12;

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::kBox;
  std::size_t dimension = 2;
  Coord lo = 0;      // box and filtered: lower corner value in every coordinate
  Coord side = 2;    // box and filtered: upper corner is lo + side
  std::size_t edges = 4;        // graph
  double loop_probability = 0.15;  // graph
  std::size_t rejection_budget = 200000;  // filtered
};

ExplicitJumpSystem box_system(const IntPoint& lo, const IntPoint& hi);

GraphDegreeJumpSystem random_multigraph(std::size_t vertices, std::size_t edges, Rng& rng,
                                        double loop_probability = 0.15);

// Rejection-samples random subsets of [lo, lo + side]^n until one satisfies
// (J-EXC). Throws LimitExceeded when the budget runs out.
ExplicitJumpSystem random_filtered_system(std::size_t dimension, Coord lo, Coord side, Rng& rng,
                                          std::size_t rejection_budget);

// Dispatches on params.kind; deterministic per seed. Throws
// std::invalid_argument for parameters beyond desk scale.
ExplicitJumpSystem generate_random(const GeneratorParams& params, std::uint64_t seed);

}  // namespace jumpopt

#endif  // JUMPOPT_JUMP_SYSTEM_HPP_
