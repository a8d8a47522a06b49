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

#include "jumpopt/jump_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "first_failure.hpp"

namespace jumpopt {
namespace {

// First counterexample with x = points[a], or nullopt.
std::optional<JexcCounterexample> jexc_from(const ExplicitJumpSystem& system, std::size_t a) {
  const IntPoint& x = system.points()[a];
  for (const IntPoint& y : system.points()) {
    if (y == x) continue;
    for (const UnitStep& s : inc(x, y)) {
      const IntPoint xs = x + s;
      if (system.contains(xs)) continue;
      bool repaired = false;
      for (const UnitStep& t : inc(xs, y)) {
        if (system.contains(xs + t)) {
          repaired = true;
          break;
        }
      }
      if (!repaired) return JexcCounterexample{x, y, s};
    }
  }
  return std::nullopt;
}

struct DegreeSearch {
  const std::vector<Edge>& edges;
  Coord loop_degree;
  // capacity[k * n + v]: degree that edges k.. can still add at v.
  std::vector<Coord> capacity;
  std::vector<bool> loop_in_suffix;
  std::size_t n;

  DegreeSearch(const std::vector<Edge>& e, std::size_t vertices, Coord loop_deg)
      : edges(e), loop_degree(loop_deg), n(vertices) {
    const std::size_t m = edges.size();
    capacity.assign((m + 1) * n, 0);
    loop_in_suffix.assign(m + 1, false);
    for (std::size_t k = m; k-- > 0;) {
      std::copy_n(capacity.begin() + static_cast<std::ptrdiff_t>((k + 1) * n), n,
                  capacity.begin() + static_cast<std::ptrdiff_t>(k * n));
      const Edge& edge = edges[k];
      if (edge.is_loop()) {
        capacity[k * n + edge.u] += loop_degree;
      } else {
        capacity[k * n + edge.u] += 1;
        capacity[k * n + edge.v] += 1;
      }
      loop_in_suffix[k] = loop_in_suffix[k + 1] || edge.is_loop();
    }
  }

  bool feasible(std::size_t k, const std::vector<Coord>& residual) const {
    Coord total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (residual[v] < 0 || residual[v] > capacity[k * n + v]) return false;
      total += residual[v];
    }
    // Every remaining edge adds an even amount to the total degree unless a
    // loop counted once is still available.
    const bool even_steps = loop_degree % 2 == 0 || !loop_in_suffix[k];
    return !(even_steps && total % 2 != 0);
  }

  bool search(std::size_t k, std::vector<Coord>& residual) const {
    if (!feasible(k, residual)) return false;
    if (std::all_of(residual.begin(), residual.end(), [](Coord r) { return r == 0; })) return true;
    if (k == edges.size()) return false;
    const Edge& edge = edges[k];
    if (edge.is_loop()) {
      residual[edge.u] -= loop_degree;
    } else {
      residual[edge.u] -= 1;
      residual[edge.v] -= 1;
    }
    const bool with_edge = search(k + 1, residual);
    if (edge.is_loop()) {
      residual[edge.u] += loop_degree;
    } else {
      residual[edge.u] += 1;
      residual[edge.v] += 1;
    }
    return with_edge || search(k + 1, residual);
  }
};

void check_params(const GeneratorParams& p) {
  if (p.dimension == 0 || p.dimension > kMaxGeneratedDimension) {
    throw std::invalid_argument("generator dimension must be in [1, " +
                                std::to_string(kMaxGeneratedDimension) + "]");
  }
  if (p.kind != GeneratorKind::kGraph && (p.side < 0 || p.side > kMaxGeneratedSide)) {
    throw std::invalid_argument("generator side must be in [0, " +
                                std::to_string(kMaxGeneratedSide) + "]");
  }
  if (p.kind == GeneratorKind::kGraph && p.edges > kMaxGeneratedEdges) {
    throw std::invalid_argument("generator edge count must be at most " +
                                std::to_string(kMaxGeneratedEdges));
  }
}

}  // namespace

ExplicitJumpSystem::ExplicitJumpSystem(std::vector<IntPoint> points) {
  if (points.empty()) throw std::invalid_argument("jump system must be nonempty");
  dimension_ = points.front().dimension();
  for (const IntPoint& p : points) {
    if (p.dimension() != dimension_) throw DimensionMismatch(dimension_, p.dimension());
    for (Coord c : p.coords()) {
      if (std::llabs(c) > kMaxAbsCoord) {
        throw std::invalid_argument("coordinate out of range in " + p.to_string());
      }
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
  index_.insert(points_.begin(), points_.end());

  bbox_.assign(dimension_, Interval{std::numeric_limits<Coord>::max(),
                                    std::numeric_limits<Coord>::min()});
  for (const IntPoint& p : points_) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      bbox_[i].min = std::min(bbox_[i].min, p[i]);
      bbox_[i].max = std::max(bbox_[i].max, p[i]);
    }
  }
}

bool ExplicitJumpSystem::contains(const IntPoint& x) const {
  if (x.dimension() != dimension_) throw DimensionMismatch(dimension_, x.dimension());
  return index_.contains(x);
}

GraphDegreeJumpSystem::GraphDegreeJumpSystem(std::size_t vertex_count, std::vector<Edge> edges,
                                             LoopConvention loops)
    : vertex_count_(vertex_count), edges_(std::move(edges)), loops_(loops) {
  if (vertex_count_ == 0) throw std::invalid_argument("graph needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

bool GraphDegreeJumpSystem::contains(const IntPoint& x) const {
  if (x.dimension() != vertex_count_) throw DimensionMismatch(vertex_count_, x.dimension());
  std::vector<Coord> residual(x.coords().begin(), x.coords().end());
  const DegreeSearch search(edges_, vertex_count_, loop_degree());
  return search.search(0, residual);
}

std::vector<Interval> GraphDegreeJumpSystem::bounding_box() const {
  std::vector<Interval> box(vertex_count_);
  for (const Edge& e : edges_) {
    if (e.is_loop()) {
      box[e.u].max += loop_degree();
    } else {
      box[e.u].max += 1;
      box[e.v].max += 1;
    }
  }
  return box;
}

ExplicitJumpSystem materialize(const GraphDegreeJumpSystem& graph, std::size_t edge_limit) {
  const auto edges = graph.edges();
  if (edges.size() > edge_limit) {
    throw LimitExceeded("graph has " + std::to_string(edges.size()) +
                        " edges; materialization limit is " + std::to_string(edge_limit));
  }
  const Coord loop_degree = static_cast<Coord>(graph.loop_convention());
  std::set<IntPoint> seen;
  IntPoint degrees(graph.vertex_count());
  seen.insert(degrees);
  // Gray-code walk: subset g(k) differs from g(k - 1) in exactly one edge.
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  std::uint64_t previous = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t flipped = gray ^ previous;
    const auto e = static_cast<std::size_t>(__builtin_ctzll(flipped));
    const Coord sign = (gray & flipped) != 0 ? 1 : -1;
    const Edge& edge = edges[e];
    if (edge.is_loop()) {
      degrees[edge.u] += sign * loop_degree;
    } else {
      degrees[edge.u] += sign;
      degrees[edge.v] += sign;
    }
    seen.insert(degrees);
    previous = gray;
  }
  return ExplicitJumpSystem(std::vector<IntPoint>(seen.begin(), seen.end()));
}

std::optional<JexcCounterexample> verify_jexc(const ExplicitJumpSystem& system,
                                              Execution execution) {
  // Points are sorted, so the smallest failing index carries the
  // lexicographically first counterexample.
  return internal::first_failure(system.size(), execution,
                                 [&](std::size_t a) { return jexc_from(system, a); });
}

Coord psi(const ExplicitJumpSystem& system) {
  Coord total = 0;
  for (const Interval& range : system.bbox()) total += range.max - range.min;
  return total;
}

ExplicitJumpSystem box_system(const IntPoint& lo, const IntPoint& hi) {
  if (lo.dimension() != hi.dimension()) throw DimensionMismatch(lo.dimension(), hi.dimension());
  const std::size_t n = lo.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("box corner " + lo.to_string() + " exceeds " +
                                                   hi.to_string());
  }
  std::vector<IntPoint> points;
  IntPoint p = lo;
  while (true) {
    points.push_back(p);
    std::size_t i = n;
    while (i-- > 0) {
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return ExplicitJumpSystem(std::move(points));
}

GraphDegreeJumpSystem random_multigraph(std::size_t vertices, std::size_t edges, Rng& rng,
                                        double loop_probability) {
  std::vector<Edge> list;
  list.reserve(edges);
  const auto last = static_cast<std::int64_t>(vertices) - 1;
  for (std::size_t k = 0; k < edges; ++k) {
    const auto u = static_cast<std::size_t>(rng.uniform(0, last));
    std::size_t v = u;
    if (vertices > 1 && !rng.coin(loop_probability)) {
      v = static_cast<std::size_t>(rng.uniform(0, last - 1));
      if (v >= u) ++v;
    }
    list.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  return GraphDegreeJumpSystem(vertices, std::move(list));
}

ExplicitJumpSystem random_filtered_system(std::size_t dimension, Coord lo, Coord side, Rng& rng,
                                          std::size_t rejection_budget) {
  const ExplicitJumpSystem box = box_system(IntPoint(std::vector<Coord>(dimension, lo)),
                                            IntPoint(std::vector<Coord>(dimension, lo + side)));
  const auto box_size = static_cast<std::int64_t>(box.size());
  for (std::size_t attempt = 0; attempt < rejection_budget; ++attempt) {
    // Small sets pass far more often than dense ones, so draw the target
    // size first and then sample that many distinct box points.
    const std::int64_t target = rng.uniform(1, std::min<std::int64_t>(box_size, 7));
    std::vector<std::size_t> chosen;
    while (static_cast<std::int64_t>(chosen.size()) < target) {
      const auto k = static_cast<std::size_t>(rng.uniform(0, box_size - 1));
      if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) chosen.push_back(k);
    }
    std::vector<IntPoint> points;
    points.reserve(chosen.size());
    for (std::size_t k : chosen) points.push_back(box.points()[k]);
    ExplicitJumpSystem candidate(std::move(points));
    if (!verify_jexc(candidate, Execution::kSerial)) return candidate;
  }
  throw LimitExceeded("rejection budget of " + std::to_string(rejection_budget) +
                      " exhausted without a jump system");
}

ExplicitJumpSystem generate_random(const GeneratorParams& params, std::uint64_t seed) {
  check_params(params);
  Rng rng(seed);
  switch (params.kind) {
    case GeneratorKind::kBox:
      return box_system(IntPoint(std::vector<Coord>(params.dimension, params.lo)),
                        IntPoint(std::vector<Coord>(params.dimension, params.lo + params.side)));
    case GeneratorKind::kGraph:
      return materialize(
          random_multigraph(params.dimension, params.edges, rng, params.loop_probability));
    case GeneratorKind::kFilteredExplicit:
      return random_filtered_system(params.dimension, params.lo, params.side, rng,
                                    params.rejection_budget);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace jumpopt
