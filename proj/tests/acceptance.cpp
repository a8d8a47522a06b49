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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also enforces its time budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "jumpopt/delta_matroid.hpp"
#include "jumpopt/instance_io.hpp"
#include "jumpopt/oracle.hpp"
#include "jumpopt/solvers.hpp"
#include "jumpopt/sweep.hpp"

namespace jumpopt {
namespace {

const std::filesystem::path kFixtures = JUMPOPT_FIXTURE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct JscFixture {
  ExplicitJumpSystem system;
  SeparableObjective objective;
};

JscFixture load(const char* name) {
  const Instance inst = read_instance(kFixtures / name);
  return {explicit_form(inst.jsc().system), inst.jsc().objective};
}

std::string path_text(const std::vector<IntPoint>& path) {
  std::string s;
  for (std::size_t k = 0; k < path.size(); ++k) s += (k ? "->" : "") + path[k].to_string();
  return s;
}

Outcome first_steps_on_j1() {
  Outcome o;
  const auto [j, f] = load("j1.json");
  const OptimalityProfile profile(j, f);
  const IntPoint x0{0, 0};
  const Trace worst = jsc_greedy(j, f, x0, TStarPolicy::kWorst);
  o.require(!worst.steps.empty(), "greedy took no step");
  if (!o.ok) return o;
  const IntPoint x1 = worst.trajectory()[1];
  o.require(x1 == IntPoint{1, 1}, "worst-policy first step reached " + x1.to_string());
  o.require(profile.m_star(x0) == std::vector<IntPoint>{{3, 0}}, "optimum is not (3,0)");
  o.require(profile.mu(x0) == 3 && profile.mu(x1) == 3,
            "distances " + std::to_string(profile.mu(x0)) + ", " + std::to_string(profile.mu(x1)));
  const Trace refined = jsc_refined_greedy(j, f, x0);
  const IntPoint r1 = refined.trajectory()[1];
  o.require(r1 == IntPoint{1, 0} && profile.mu(r1) == 2,
            "refined first step " + r1.to_string() + " at distance " +
                std::to_string(profile.mu(r1)));
  o.detail = o.ok ? "greedy(worst) (0,0)->(1,1) keeps distance 3; refined (0,0)->(1,0) distance 2"
                  : o.detail;
  return o;
}

Outcome trajectories_on_j1() {
  Outcome o;
  const auto [j, f] = load("j1.json");
  const auto refined = jsc_refined_greedy(j, f, {0, 0}).trajectory();
  const auto adversarial = jsc_greedy(j, f, {0, 0}, TStarPolicy::kWorst).trajectory();
  o.require(refined == std::vector<IntPoint>{{0, 0}, {1, 0}, {3, 0}},
            "refined " + path_text(refined));
  o.require(adversarial == std::vector<IntPoint>{{0, 0}, {1, 1}, {2, 1}, {3, 0}},
            "adversarial greedy " + path_text(adversarial));
  if (o.ok) o.detail = "refined " + path_text(refined) + "; greedy " + path_text(adversarial);
  return o;
}

Outcome runs_on_j2() {
  Outcome o;
  const auto [j, f] = load("j2.json");
  const OptimalityProfile profile(j, f);
  const auto r2 = jsc_refined_greedy2(j, f, {0, 0}).trajectory();
  o.require(r2 == std::vector<IntPoint>{{0, 0}, {0, 2}, {1, 2}, {2, 1}, {3, 0}},
            "refined2 " + path_text(r2));
  const auto n0 = neighborhood(j, {0, 0});
  o.require(n0 == std::vector<IntPoint>{{0, 0}, {0, 1}, {0, 2}, {1, 0}},
            "first neighborhood " + path_text(n0));
  const Trace refined = jsc_refined_greedy(j, f, {0, 0});
  o.require(refined.steps.size() == 2, "refined took " + std::to_string(refined.steps.size()));
  o.require(profile.mu({0, 0}) == 3, "mu(x0) = " + std::to_string(profile.mu({0, 0})));
  if (o.ok) o.detail = "refined2 4 iterations " + path_text(r2) + "; refined 2; mu(x0)=3";
  return o;
}

// ---- corpus sweep -----------------------------------------------------------

struct CorpusStats {
  std::size_t instances = 0;
  std::size_t sweeps = 0;
  std::size_t starts = 0;
  std::size_t edges = 0;
  std::size_t boxes = 0;
  std::size_t graphs = 0;
  std::size_t filtered = 0;
};

void sweep_system(const ExplicitJumpSystem& j, std::uint64_t seed, CorpusStats& stats,
                  Outcome& o) {
  ++stats.instances;
  Rng rng(seed);
  for (ObjectiveKind kind :
       {ObjectiveKind::kLinear, ObjectiveKind::kQuadratic, ObjectiveKind::kTable}) {
    const SeparableObjective f = random_objective(kind, j.bbox(), rng);
    const SweepReport r = sweep_instance(j, f);
    ++stats.sweeps;
    stats.starts += r.points;
    stats.edges += r.greedy_edges + r.refined_edges;
    if (!r.passed() && o.ok) {
      const Violation& v = r.violations.front();
      o.require(false, to_string(v.check) + " at " + v.x.to_string() + ": " + v.detail +
                           " (instance " + instance_to_json(Instance{"", JscInstance{j, f, {}}}).dump() +
                           ")");
    }
  }
}

Outcome property_sweep() {
  Outcome o;
  CorpusStats stats;
  std::uint64_t seed = 1;

  // Every box [0, s_1] x ... x [0, s_n] with sides up to 3.
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Coord> sides(n, 0);
    while (true) {
      sweep_system(box_system(IntPoint(n), IntPoint(sides)), seed++, stats, o);
      ++stats.boxes;
      std::size_t i = 0;
      while (i < n && sides[i] == 3) sides[i++] = 0;
      if (i == n) break;
      ++sides[i];
    }
  }
  // Random multigraphs with up to ten edges on up to five vertices.
  Rng graph_rng(20261018);
  for (int k = 0; k < 60; ++k) {
    const auto n = static_cast<std::size_t>(2 + k % 4);
    const auto m = static_cast<std::size_t>(graph_rng.uniform(1, 10));
    sweep_system(materialize(random_multigraph(n, m, graph_rng)), seed++, stats, o);
    ++stats.graphs;
  }
  // Rejection-sampled point sets that satisfy the exchange axiom.
  GeneratorParams p;
  p.kind = GeneratorKind::kFilteredExplicit;
  for (int k = 0; k < 120; ++k) {
    p.dimension = 2 + k % 2;
    p.lo = k % 3 - 1;
    p.side = 2 + k % 3 / 2;
    sweep_system(generate_random(p, 1000 + k), seed++, stats, o);
    ++stats.filtered;
  }
  o.require(stats.instances >= 200 && stats.graphs >= 50 && stats.filtered >= 100,
            "corpus too small");
  if (o.ok) {
    o.detail = std::to_string(stats.instances) + " systems (" + std::to_string(stats.boxes) +
               " boxes, " + std::to_string(stats.graphs) + " graphs, " +
               std::to_string(stats.filtered) + " filtered) x 3 objectives: " +
               std::to_string(stats.starts) + " starts, " + std::to_string(stats.edges) +
               " branch edges, zero violations";
  }
  return o;
}

// ---- delta-matroids ---------------------------------------------------------

std::vector<Weights> weight_vectors(std::size_t n, Rng& rng) {
  std::vector<Weights> out;
  // Ties, zeros, and sign mixes first; the rest random.
  out.push_back(Weights(n, 0));
  out.push_back(Weights(n, 1));
  out.push_back(Weights(n, -1));
  Weights alternating;
  Weights ramp;
  Weights tied_mixed;
  Weights one_zero;
  for (std::size_t i = 0; i < n; ++i) {
    alternating.push_back(i % 2 ? 2 : -2);
    ramp.push_back(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n / 2));
    tied_mixed.push_back(i % 3 == 0 ? Value(-3) : Value(3));
    one_zero.push_back(i == 0 ? Value(0) : Value(-1, 2));
  }
  out.insert(out.end(), {alternating, ramp, tied_mixed, one_zero});
  while (out.size() < 20) {
    Weights c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.uniform(-3, 3));
    out.push_back(std::move(c));
  }
  return out;
}

void check_delta_matroid(const DeltaMatroid& d, Rng& rng, std::size_t& runs, Outcome& o) {
  const std::size_t n = d.ground_size();
  const ExplicitJumpSystem j = to_jump_system(d);
  for (const Weights& c : weight_vectors(n, rng)) {
    if (!o.ok) return;
    const DmProfile profile(d, c);
    const std::string where = "family with " + std::to_string(d.family().size()) +
                              " sets on n=" + std::to_string(n);
    for (const auto& order : all_greedy_orders(c)) {
      const SetMask g = dm_greedy(d, c, order);
      o.require(d.contains(g) && set_cost(c, g) == profile.opt_value(),
                "dm_greedy not optimal on " + where);
    }
    const SeparableObjective f = linear_objective(c);
    const OptimalityProfile jp(j, f);
    for (SetMask start : d.family()) {
      for (const DmTrace& t : enumerate_dm_refined_traces(d, c, start).traces) {
        ++runs;
        o.require(t.final_cost == profile.opt_value(),
                  "dm_refined_greedy ends at " + set_to_string(t.final_set) + " on " + where);
        for (const DmStep& s : t.steps) {
          if (auto failure = check_refined_step(profile, s.before, s.move)) {
            o.require(false, *failure + " on " + where);
          }
        }
      }
      const IntPoint x = characteristic_vector(start, n);
      o.require(profile.mu(start) == static_cast<std::size_t>(jp.mu(x)),
                "distance differs under embedding on " + where);
      o.require(dm_refined_greedy(d, c, start).final_cost == jsc_refined_greedy(j, f, x).final_value,
                "final cost differs under embedding on " + where);
    }
  }
}

Outcome delta_matroid_sweep() {
  Outcome o;
  Rng rng(404);
  std::size_t small_families = 0;
  std::size_t large_families = 0;
  std::size_t runs = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_delta_matroid(n, [&](const DeltaMatroid& d) {
      ++small_families;
      check_delta_matroid(d, rng, runs, o);
    });
  }
  for_each_delta_matroid(4, [&](const DeltaMatroid& d) {
    ++large_families;
    check_delta_matroid(d, rng, runs, o);
  });
  o.require(large_families >= 1000, "only " + std::to_string(large_families) + " on n=4");
  if (o.ok) {
    o.detail = std::to_string(small_families) + " families on n<=3 and " +
               std::to_string(large_families) + " on n=4, 20 weight vectors each, " +
               std::to_string(runs) + " refined runs";
  }
  return o;
}

Outcome axiom_equivalence() {
  Outcome o;
  std::size_t families = 0;
  std::size_t agreeing_pass = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t subsets = std::size_t{1} << n;
    for (std::uint32_t bitmap = 1; bitmap < (1U << subsets); ++bitmap) {
      std::vector<SetMask> members;
      for (std::size_t s = 0; s < subsets; ++s) {
        if ((bitmap >> s) & 1U) members.push_back(static_cast<SetMask>(s));
      }
      const DeltaMatroid d(n, members);
      const bool exchange = !verify_symmetric_exchange(d).has_value();
      const bool jump = !verify_jexc(to_jump_system(d)).has_value();
      ++families;
      agreeing_pass += exchange && jump;
      o.require(exchange == jump, "disagreement on a family over n=" + std::to_string(n));
    }
  }
  if (o.ok) {
    o.detail = std::to_string(families) + " families (255 on n=3), " +
               std::to_string(agreeing_pass) + " pass both axioms, zero disagreements";
  }
  return o;
}

// Distance identity evaluated directly, without the closed form.
bool region_by_distance(const IntPoint& y, const IntPoint& x, const UnitStep& s,
                        const UnitStep& t) {
  const IntPoint target = x + s + t;
  return l1_distance(y, target) == l1_distance(y, x) - step_sum_norm(s, t);
}

Outcome s_region_consistency() {
  Outcome o;
  const auto steps = unit_steps_with_zero(3);
  std::size_t cases = 0;
  for (Coord a = -2; a <= 2 && o.ok; ++a) {
    for (Coord b = -2; b <= 2; ++b) {
      for (Coord c = -2; c <= 2; ++c) {
        const IntPoint x{a, b, c};
        for (const UnitStep& s : steps) {
          for (const UnitStep& t : steps) {
            if (step_sum_norm(s, t) == 0) continue;
            for (Coord u = -4; u <= 4; ++u) {
              for (Coord v = -4; v <= 4; ++v) {
                for (Coord w = -4; w <= 4; ++w) {
                  const IntPoint y{u, v, w};
                  ++cases;
                  if (in_s_region(y, x, s, t) != region_by_distance(y, x, s, t)) {
                    o.require(false, "y=" + y.to_string() + " x=" + x.to_string() +
                                         " s=" + s.to_string() + " t=" + t.to_string());
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (y, x, s, t) cases, zero disagreements";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace jumpopt

int main() {
  using namespace jumpopt;
  configure_threads();
  const std::vector<Criterion> criteria = {
      {1, "first steps on j1", 1.0, first_steps_on_j1},
      {2, "trajectories on j1", 1.0, trajectories_on_j1},
      {3, "runs on j2", 1.0, runs_on_j2},
      {4, "property sweep over generated corpus", 600.0, property_sweep},
      {5, "delta-matroid sweep", 600.0, delta_matroid_sweep},
      {6, "exchange axiom equivalence", 60.0, axiom_equivalence},
      {7, "target region formula", 60.0, s_region_consistency},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto begin = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    if (o.ok && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(c.budget_seconds) + " s budget)";
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %d: %s: %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
