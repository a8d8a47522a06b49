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

// Subcommands: validate, solve, verify, gen. See README.md for usage.

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jumpopt/delta_matroid.hpp"
#include "jumpopt/instance_io.hpp"
#include "jumpopt/oracle.hpp"
#include "jumpopt/parallel.hpp"
#include "jumpopt/solvers.hpp"
#include "jumpopt/sweep.hpp"

namespace jumpopt::cli {
namespace {

using nlohmann::json;

// Thrown for usage problems discovered after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCheckNames = {"thm1", "thm2", "thm3", "thm4",
                                              "thm5", "cor1", "cor2", "cor3"};

bool is_dm_algorithm(const std::string& algo) { return algo == "dm-greedy" || algo == "dm-refined"; }

// Loads an instance and rejects anything validate would flag.
Instance load_valid(const std::string& path) {
  Instance instance = read_instance(path);
  const auto failures = validate_instance(instance);
  if (!failures.empty()) {
    throw InputError(path + ": invalid instance (" + failures.front().check + ": " +
                     failures.front().message + ")");
  }
  return instance;
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out) {
  const Instance instance = read_instance(path);
  const auto failures = validate_instance(instance);
  if (failures.empty()) {
    if (instance.is_delta_matroid()) {
      out << "valid delta-matroid: " << instance.dm().family.family().size() << " sets\n";
    } else {
      out << "valid jump system: " << explicit_form(instance.jsc().system).size() << " points\n";
    }
    return kExitOk;
  }
  for (const auto& f : failures) out << f.check << ": " << f.message << '\n';
  return kExitViolation;
}

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string algo = "refined";
  std::string tie = "lex";
  std::string tpolicy = "best";
  bool tpolicy_given = false;
  std::string start;
  std::string out;
  bool annotate = false;
  std::size_t branch_cap = 1'000'000;
};

void print_summary(std::ostream& out, const std::string& final_text, const Value& value,
                   std::size_t steps) {
  out << "final " << final_text << '\n' << "value " << value << '\n' << "steps " << steps << '\n';
}

int solve_jsc(const SolveArgs& a, const Instance& instance, std::ostream& out) {
  const JscInstance& jsc = instance.jsc();
  if (a.tpolicy_given && a.algo != "greedy") {
    throw UsageError("--tpolicy applies only to --algo greedy");
  }
  const IntPoint start = !a.start.empty() ? parse_point(a.start)
                         : jsc.start      ? *jsc.start
                                          : throw UsageError("no start point: pass --start");
  const JumpSystem& system = as_jump_system(jsc.system);
  if (start.dimension() != system.dimension() || !system.contains(start)) {
    throw UsageError("start " + start.to_string() + " is not in the system");
  }
  const Algorithm algorithm = parse_algorithm(a.algo);
  SolverOptions options;
  options.tie = parse_tie_break(a.tie);
  options.tpolicy = parse_tstar_policy(a.tpolicy);
  options.branch_cap = a.branch_cap;

  TraceFile file;
  file.instance_digest = instance_digest(instance);
  file.algorithm = a.algo;
  file.tie = options.tie;
  if (algorithm == Algorithm::kGreedy) file.tpolicy = options.tpolicy;

  const bool enumerate =
      options.tie == TieBreak::kEnumerateAll || options.tpolicy == TStarPolicy::kEnumerateAll;
  if (enumerate) {
    TraceSet set = enumerate_traces(algorithm, system, jsc.objective, start, options);
    file.truncated = set.truncated;
    file.traces = std::move(set.traces);
    out << "traces " << file.traces.size() << (file.truncated ? " (truncated)" : "") << '\n';
    for (std::size_t k = 0; k < file.traces.size(); ++k) {
      const Trace& t = file.traces[k];
      out << "trace " << k + 1 << ": steps " << t.steps.size() << ", final " << t.final_point
          << ", value " << t.final_value << '\n';
    }
  } else {
    file.traces.push_back(solve(algorithm, system, jsc.objective, start, options));
    const Trace& t = file.traces.front();
    print_summary(out, t.final_point.to_string(), t.final_value, t.steps.size());
  }

  if (!a.out.empty()) {
    std::unique_ptr<OptimalityProfile> profile;
    if (a.annotate) {
      profile = std::make_unique<OptimalityProfile>(explicit_form(jsc.system), jsc.objective);
    }
    write_json(a.out, trace_file_to_json(file, profile.get()));
  }
  return kExitOk;
}

int solve_dm(const SolveArgs& a, const Instance& instance, std::ostream& out) {
  const DmInstance& dm = instance.dm();
  if (a.tpolicy_given) throw UsageError("--tpolicy applies only to --algo greedy");
  const bool all = parse_tie_break(a.tie) == TieBreak::kEnumerateAll;

  TraceFile file;
  file.instance_digest = instance_digest(instance);
  file.algorithm = a.algo;
  file.tie = all ? TieBreak::kEnumerateAll : TieBreak::kLex;

  if (a.algo == "dm-greedy") {
    // Greedy takes no start; its output is recorded as a zero-step trace.
    std::vector<std::vector<std::size_t>> orders;
    if (all) {
      orders = all_greedy_orders(dm.weights);
    } else {
      orders.push_back(greedy_order(dm.weights));
    }
    for (const auto& order : orders) {
      const SetMask result = dm_greedy(dm.family, dm.weights, order);
      file.dm_traces.push_back(DmTrace{result, {}, result, set_cost(dm.weights, result)});
    }
  } else {
    const SetMask start = !a.start.empty() ? parse_set(a.start, dm.family.ground_size())
                          : dm.start       ? *dm.start
                                           : throw UsageError("no start set: pass --start");
    if (!dm.family.contains(start)) {
      throw UsageError("start " + set_to_string(start) + " is not in the family");
    }
    if (all) {
      DmTraceSet set = enumerate_dm_refined_traces(dm.family, dm.weights, start, a.branch_cap);
      file.truncated = set.truncated;
      file.dm_traces = std::move(set.traces);
    } else {
      file.dm_traces.push_back(dm_refined_greedy(dm.family, dm.weights, start));
    }
  }

  if (all) {
    out << "traces " << file.dm_traces.size() << (file.truncated ? " (truncated)" : "") << '\n';
    for (std::size_t k = 0; k < file.dm_traces.size(); ++k) {
      const DmTrace& t = file.dm_traces[k];
      out << "trace " << k + 1 << ": steps " << t.steps.size() << ", final "
          << set_to_string(t.final_set) << ", value " << t.final_cost << '\n';
    }
  } else {
    const DmTrace& t = file.dm_traces.front();
    print_summary(out, set_to_string(t.final_set), t.final_cost, t.steps.size());
  }

  if (!a.out.empty()) {
    std::unique_ptr<DmProfile> profile;
    if (a.annotate) profile = std::make_unique<DmProfile>(dm.family, dm.weights);
    write_json(a.out, trace_file_to_json(file, nullptr, profile.get()));
  }
  return kExitOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance instance = load_valid(a.instance);
  if (is_dm_algorithm(a.algo) != instance.is_delta_matroid()) {
    throw UsageError("--algo " + a.algo + " does not apply to this instance kind");
  }
  return instance.is_delta_matroid() ? solve_dm(a, instance, out) : solve_jsc(a, instance, out);
}

// ---- verify -----------------------------------------------------------------

struct CheckResult {
  std::string name;
  std::optional<std::string> failure;
};

std::vector<std::string> expand_checks(const std::vector<std::string>& requested, bool* all) {
  *all = requested.empty() ||
         std::find(requested.begin(), requested.end(), "all") != requested.end();
  if (*all) return kCheckNames;
  std::vector<std::string> out;
  for (const std::string& name : kCheckNames) {
    if (std::find(requested.begin(), requested.end(), name) != requested.end()) {
      out.push_back(name);
    }
  }
  return out;
}

std::vector<CheckResult> sweep_checks(const ExplicitJumpSystem& system, const SeparableObjective& f,
                                      const std::vector<std::string>& names) {
  const SweepReport report = sweep_instance(system, f);
  std::vector<CheckResult> results;
  for (Check check : kAllChecks) {
    const std::string name = to_string(check);
    if (std::find(names.begin(), names.end(), name) == names.end()) continue;
    CheckResult r{name, std::nullopt};
    if (const Violation* v = report.find(check)) r.failure = "at " + v->x.to_string() + ": " + v->detail;
    results.push_back(std::move(r));
  }
  return results;
}

// Every refined move from every feasible set; equivalent to all runs.
std::optional<std::string> dm_sweep(const DmInstance& dm) {
  const DmProfile profile(dm.family, dm.weights);
  for (SetMask set : dm.family.family()) {
    const auto moves = dm_refined_moves(dm.family, dm.weights, set, TieBreak::kEnumerateAll);
    if (moves.empty() && !profile.is_optimal(set)) {
      return "refined run stops at non-optimal " + set_to_string(set);
    }
    for (const DmMove& move : moves) {
      if (auto failure = check_refined_step(profile, set, move)) {
        return "at " + set_to_string(set) + ": " + *failure;
      }
    }
  }
  return std::nullopt;
}

std::string inapplicable(const std::string& check, const std::string& what) {
  return check + " does not apply to " + what;
}

std::vector<CheckResult> verify_without_trace(const Instance& instance,
                                              const std::vector<std::string>& names, bool all) {
  std::vector<std::string> sweep_names;
  bool want_cor3 = false;
  for (const std::string& n : names) {
    if (n == "cor3") {
      want_cor3 = true;
    } else {
      sweep_names.push_back(n);
    }
  }
  std::vector<CheckResult> results;
  if (instance.is_delta_matroid()) {
    // Jump-system checks run on the characteristic-vector image.
    const DmInstance& dm = instance.dm();
    if (!sweep_names.empty()) {
      results = sweep_checks(to_jump_system(dm.family), linear_objective(dm.weights), sweep_names);
    }
    if (want_cor3) results.push_back({"cor3", dm_sweep(dm)});
    return results;
  }
  if (want_cor3 && !all) throw UsageError(inapplicable("cor3", "jump-system instances"));
  const JscInstance& jsc = instance.jsc();
  return sweep_checks(explicit_form(jsc.system), jsc.objective, sweep_names);
}

std::string step_failure(const StepCheck& s) {
  std::ostringstream os;
  os << "step " << s.index + 1 << ": mu " << s.mu_before << " -> " << s.mu_after
     << " (expected drop " << s.expected_drop << ")";
  if (s.drop_ok && !s.recursion_ok) os << ", nearest optima not preserved";
  return os.str();
}

std::optional<std::string> check_jsc_trace(const std::string& name, const ExplicitJumpSystem& system,
                                           const OptimalityProfile& profile, const Trace& trace) {
  if (name == "thm1") {
    if (!profile.is_optimal(trace.final_point)) {
      return "final " + trace.final_point.to_string() + " has value " +
             trace.final_value.to_string() + ", optimum " + profile.opt_value().to_string();
    }
  } else if (name == "thm2" || name == "cor2") {
    const BoundsCheck b = verify_bounds(system, profile, trace);
    if (!b.passed()) {
      return std::to_string(b.steps) + " steps outside [" + std::to_string(b.lower) + "," +
             std::to_string(b.upper) + "]";
    }
  } else if (name == "thm3") {
    if (const auto k = verify_monotone(trace)) {
      return "step " + std::to_string(*k + 2) + " has a smaller f(x + s*) - f(x) than step " +
             std::to_string(*k + 1);
    }
  } else if (name == "thm4" || name == "thm5") {
    const bool with_t = name == "thm5";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const TraceStep& st = trace.steps[k];
      const UnitStep t = with_t ? st.t : UnitStep::zero();
      const auto nearest = profile.m_star(st.x);
      const bool witnessed = std::any_of(nearest.begin(), nearest.end(), [&](const IntPoint& y) {
        return in_s_region(y, st.x, st.s, t);
      });
      if (!witnessed) {
        return "step " + std::to_string(k + 1) + " at " + st.x.to_string() +
               ": no nearest optimum in the target region";
      }
    }
  } else if (name == "cor1") {
    const GeodesicReport report = verify_geodesic_steps(profile, trace);
    if (report.first_violation) return step_failure(report.steps[*report.first_violation]);
  }
  return std::nullopt;
}

bool jsc_trace_check_applies(const std::string& name, Algorithm algorithm) {
  if (name == "thm1" || name == "cor1") return true;
  if (name == "thm2") return algorithm == Algorithm::kGreedy;
  if (name == "thm3" || name == "thm4") return algorithm != Algorithm::kRefined2;
  if (name == "thm5" || name == "cor2") return algorithm == Algorithm::kRefined;
  return false;
}

std::vector<CheckResult> verify_with_trace(const Instance& instance, const std::string& trace_path,
                                           const std::vector<std::string>& names, bool all) {
  std::ifstream in(trace_path);
  if (!in) throw InputError("cannot open " + trace_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(trace_path + ": " + e.what());
  }
  const std::size_t ground = instance.is_delta_matroid() ? instance.dm().family.ground_size() : 0;
  const TraceFile file = trace_file_from_json(doc, ground);
  if (file.instance_digest != instance_digest(instance)) {
    throw InputError("trace " + trace_path + " was recorded for a different instance");
  }
  if (is_dm_algorithm(file.algorithm) != instance.is_delta_matroid()) {
    throw InputError("trace algorithm does not match the instance kind");
  }

  std::vector<CheckResult> results;
  if (instance.is_delta_matroid()) {
    const DmInstance& dm = instance.dm();
    const DmProfile profile(dm.family, dm.weights);
    for (const std::string& name : names) {
      const bool applies =
          name == "thm1" || (name == "cor3" && file.algorithm == "dm-refined");
      if (!applies) {
        if (all) continue;
        throw UsageError(inapplicable(name, file.algorithm + " traces"));
      }
      CheckResult r{name, std::nullopt};
      for (std::size_t k = 0; k < file.dm_traces.size() && !r.failure; ++k) {
        const DmTrace& t = file.dm_traces[k];
        if (name == "thm1") {
          if (!profile.is_optimal(t.final_set)) {
            r.failure = "final " + set_to_string(t.final_set) + " is not optimal";
          }
          continue;
        }
        for (std::size_t s = 0; s < t.steps.size() && !r.failure; ++s) {
          if (auto failure = check_refined_step(profile, t.steps[s].before, t.steps[s].move)) {
            r.failure = "step " + std::to_string(s + 1) + ": " + *failure;
          }
        }
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  const JscInstance& jsc = instance.jsc();
  const ExplicitJumpSystem system = explicit_form(jsc.system);
  const OptimalityProfile profile(system, jsc.objective);
  const Algorithm algorithm = parse_algorithm(file.algorithm);
  for (const Trace& t : file.traces) {
    if (auto problem = check_trace_invariants(system, jsc.objective, t)) {
      throw InputError("trace does not replay on the instance: " + *problem);
    }
  }
  for (const std::string& name : names) {
    if (!jsc_trace_check_applies(name, algorithm)) {
      if (all) continue;
      throw UsageError(inapplicable(name, file.algorithm + " traces"));
    }
    CheckResult r{name, std::nullopt};
    for (std::size_t k = 0; k < file.traces.size() && !r.failure; ++k) {
      r.failure = check_jsc_trace(name, system, profile, file.traces[k]);
      if (r.failure && file.traces.size() > 1) {
        r.failure = "trace " + std::to_string(k + 1) + ", " + *r.failure;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

int cmd_verify(const std::string& path, const std::string& trace_path,
               const std::vector<std::string>& requested, std::ostream& out) {
  const Instance instance = load_valid(path);
  bool all = false;
  const auto names = expand_checks(requested, &all);
  const auto results = trace_path.empty() ? verify_without_trace(instance, names, all)
                                          : verify_with_trace(instance, trace_path, names, all);
  bool passed = true;
  for (const CheckResult& r : results) {
    if (r.failure) {
      passed = false;
      out << r.name << ": FAIL " << *r.failure << '\n';
    } else {
      out << r.name << ": pass\n";
    }
  }
  return passed ? kExitOk : kExitViolation;
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
  std::string kind = "box";
  std::uint64_t seed = 0;
  std::size_t n = 2;
  Coord lo = 0;
  Coord side = 2;
  std::size_t edges = 4;
  std::string graph_edges;
  int loop_convention = 2;
  std::string objective = "quadratic";
  std::size_t budget = 200000;
  std::string out;
};

std::vector<Edge> parse_edges(const std::string& text, std::size_t vertices) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    std::size_t u = 0;
    std::size_t v = 0;
    try {
      if (dash == std::string::npos) throw std::invalid_argument(item);
      u = std::stoul(item.substr(0, dash));
      v = std::stoul(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw UsageError("malformed edge '" + item + "' (expected u-v)");
    }
    if (u < 1 || v < 1 || u > vertices || v > vertices) {
      throw UsageError("edge '" + item + "' names a vertex outside 1.." + std::to_string(vertices));
    }
    edges.push_back({u - 1, v - 1});
  }
  return edges;
}

ObjectiveKind objective_kind(const std::string& name) {
  if (name == "linear") return ObjectiveKind::kLinear;
  if (name == "quadratic") return ObjectiveKind::kQuadratic;
  return ObjectiveKind::kTable;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  // Separate streams so the system does not depend on the objective kind.
  Rng objective_rng = Rng(a.seed).split();
  std::vector<json> docs;

  if (a.kind == "dm-enum") {
    for (const DeltaMatroid& family : enumerate_delta_matroids(a.n)) {
      Weights weights;
      for (std::size_t i = 0; i < a.n; ++i) weights.push_back(objective_rng.uniform(-3, 3));
      const SetMask start = family.family().front();
      docs.push_back(instance_to_json(Instance{"", DmInstance{family, std::move(weights), start}}));
    }
  } else {
    GeneratorParams params;
    params.dimension = a.n;
    params.lo = a.lo;
    params.side = a.side;
    params.edges = a.edges;
    params.rejection_budget = a.budget;
    std::optional<JumpSystemVariant> system;
    if (a.kind == "graph") {
      params.kind = GeneratorKind::kGraph;
      const auto loops = static_cast<LoopConvention>(a.loop_convention);
      if (!a.graph_edges.empty()) {
        system.emplace(std::in_place_type<GraphDegreeJumpSystem>, a.n,
                       parse_edges(a.graph_edges, a.n), loops);
      } else {
        if (a.n == 0 || a.n > kMaxGeneratedDimension || a.edges > kMaxGeneratedEdges) {
          throw UsageError("random graphs need 1 <= n <= " +
                           std::to_string(kMaxGeneratedDimension) + " and at most " +
                           std::to_string(kMaxGeneratedEdges) + " edges");
        }
        Rng rng(a.seed);
        GraphDegreeJumpSystem g = random_multigraph(a.n, a.edges, rng, params.loop_probability);
        system.emplace(std::in_place_type<GraphDegreeJumpSystem>, a.n,
                       std::vector<Edge>(g.edges().begin(), g.edges().end()), loops);
      }
    } else {
      params.kind = a.kind == "box" ? GeneratorKind::kBox : GeneratorKind::kFilteredExplicit;
      system.emplace(std::in_place_type<ExplicitJumpSystem>, generate_random(params, a.seed));
    }
    const ExplicitJumpSystem points = explicit_form(*system);
    SeparableObjective f =
        random_objective(objective_kind(a.objective), points.bbox(), objective_rng);
    const IntPoint start = points.points().front();
    docs.push_back(instance_to_json(
        Instance{a.kind + "-" + std::to_string(a.seed), JscInstance{*system, std::move(f), start}}));
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw InputError("cannot write " + a.out);
    sink = &file;
  }
  if (a.kind == "dm-enum") {
    for (const json& d : docs) *sink << d.dump() << '\n';
  } else {
    *sink << docs.front().dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_threads();
  CLI::App app{"Greedy minimization on jump systems and delta-matroids"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check axioms, convexity, and domain");
  validate->add_option("instance", validate_path, "instance file")->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run a solver and record its trace");
  solve->add_option("instance", solve_args.instance, "instance file")->required();
  solve->add_option("--algo", solve_args.algo)
      ->check(CLI::IsMember({"greedy", "refined", "refined2", "dm-greedy", "dm-refined"}))
      ->capture_default_str();
  solve->add_option("--tie", solve_args.tie)
      ->check(CLI::IsMember({"lex", "all"}))
      ->capture_default_str();
  auto* tpolicy = solve->add_option("--tpolicy", solve_args.tpolicy, "greedy only")
                      ->check(CLI::IsMember({"best", "worst", "first", "all"}))
                      ->capture_default_str();
  solve->add_option("--start", solve_args.start, "point like (0,0), or a set like {1,2}");
  solve->add_option("--out", solve_args.out, "trace file to write");
  solve->add_flag("--annotate", solve_args.annotate, "add oracle distances to the trace");
  solve->add_option("--branch-cap", solve_args.branch_cap, "trace limit for --tie/--tpolicy all")
      ->capture_default_str();

  std::string verify_path;
  std::string verify_trace;
  std::vector<std::string> verify_checks;
  auto* verify = app.add_subcommand("verify", "check optimality properties on an instance or a trace");
  verify->add_option("instance", verify_path, "instance file")->required();
  verify->add_option("--trace", verify_trace, "trace file from solve --out");
  std::vector<std::string> allowed = kCheckNames;
  allowed.push_back("all");
  verify->add_option("--checks", verify_checks, "comma-separated, default all")
      ->delimiter(',')
      ->check(CLI::IsMember(allowed));

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit random or enumerated instances");
  gen->add_option("--kind", gen_args.kind)
      ->check(CLI::IsMember({"graph", "box", "filtered", "dm-enum"}))
      ->capture_default_str();
  gen->add_option("--seed", gen_args.seed)->capture_default_str();
  gen->add_option("--n", gen_args.n, "dimension, vertices, or ground set size")
      ->capture_default_str();
  gen->add_option("--lo", gen_args.lo, "box/filtered lower corner")->capture_default_str();
  gen->add_option("--side", gen_args.side, "box/filtered side length")->capture_default_str();
  gen->add_option("--edges", gen_args.edges, "random graph edge count")->capture_default_str();
  gen->add_option("--graph-edges", gen_args.graph_edges, "fixed edges like 1-2,2-3,1-3");
  gen->add_option("--loop-convention", gen_args.loop_convention, "degree of a loop")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  gen->add_option("--objective", gen_args.objective)
      ->check(CLI::IsMember({"linear", "quadratic", "table"}))
      ->capture_default_str();
  gen->add_option("--budget", gen_args.budget, "filtered rejection budget")
      ->capture_default_str();
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  std::vector<const char*> argv = {"jumpopt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
  solve_args.tpolicy_given = tpolicy->count() > 0;

  try {
    if (*validate) return cmd_validate(validate_path, out);
    if (*solve) return cmd_solve(solve_args, out);
    if (*verify) return cmd_verify(verify_path, verify_trace, verify_checks, out);
    return cmd_gen(gen_args, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace jumpopt::cli
