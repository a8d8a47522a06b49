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

#include "jumpopt/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace jumpopt {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const json& j, const char* what) {
  const std::int64_t v = integer(j, what);
  if (v < 0) throw InputError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

IntPoint point_from_json(const json& j, std::size_t dimension) {
  std::vector<Coord> coords;
  for (const json& c : array(j, "point")) coords.push_back(integer(c, "coordinate"));
  if (coords.size() != dimension) {
    throw InputError("point " + j.dump() + " has dimension " + std::to_string(coords.size()) +
                     ", expected " + std::to_string(dimension));
  }
  return IntPoint(std::move(coords));
}

json point_to_json(const IntPoint& x) {
  json j = json::array();
  for (Coord c : x.coords()) j.push_back(c);
  return j;
}

SetMask set_from_json(const json& j, std::size_t ground_size) {
  SetMask set = 0;
  for (const json& e : array(j, "set")) {
    const std::int64_t v = integer(e, "set element");
    if (v < 1 || static_cast<std::size_t>(v) > ground_size) {
      throw InputError("set element " + std::to_string(v) + " outside 1.." +
                       std::to_string(ground_size));
    }
    set |= element(static_cast<std::size_t>(v - 1));
  }
  return set;
}

json set_to_json(SetMask set) {
  json j = json::array();
  for (std::size_t i = 0; i < kMaxGroundSize; ++i) {
    if (has(set, i)) j.push_back(i + 1);
  }
  return j;
}

UnivariateConvex term_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (kind == "linear") {
    return UnivariateConvex::linear(value_from_json(field(j, "slope")),
                                    j.contains("intercept") ? value_from_json(j["intercept"]) : 0);
  }
  if (kind == "quadratic") {
    return UnivariateConvex::quadratic(value_from_json(field(j, "weight")),
                                       value_from_json(field(j, "center")),
                                       j.contains("offset") ? value_from_json(j["offset"]) : 0);
  }
  if (kind == "table") {
    std::vector<Value> values;
    for (const json& v : array(field(j, "values"), "values")) values.push_back(value_from_json(v));
    if (values.empty()) throw InputError("table term needs at least one value");
    return UnivariateConvex::table(integer(field(j, "lo"), "lo"), std::move(values));
  }
  throw InputError("unknown term kind " + kind.dump());
}

json term_to_json(const UnivariateConvex& term) {
  return std::visit(
      [](const auto& piece) -> json {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, LinearPiece>) {
          return {{"kind", "linear"},
                  {"slope", value_to_json(piece.slope)},
                  {"intercept", value_to_json(piece.intercept)}};
        } else if constexpr (std::is_same_v<T, QuadraticPiece>) {
          return {{"kind", "quadratic"},
                  {"weight", value_to_json(piece.weight)},
                  {"center", value_to_json(piece.center)},
                  {"offset", value_to_json(piece.offset)}};
        } else {
          json values = json::array();
          for (const Value& v : piece.values) values.push_back(value_to_json(v));
          return {{"kind", "table"}, {"lo", piece.lo}, {"values", values}};
        }
      },
      term.piece());
}

JscInstance jsc_from_json(const json& doc, std::size_t dimension) {
  const json& js = field(doc, "jump_system");
  const json& kind = field(js, "kind");
  std::optional<JumpSystemVariant> system;
  if (kind == "explicit") {
    std::vector<IntPoint> points;
    for (const json& p : array(field(js, "points"), "points")) {
      points.push_back(point_from_json(p, dimension));
    }
    if (points.empty()) throw InputError("jump system has no points");
    system.emplace(std::in_place_type<ExplicitJumpSystem>, std::move(points));
  } else if (kind == "graph") {
    const std::size_t vertices = count(field(js, "vertices"), "vertices");
    if (vertices != dimension) throw InputError("graph vertex count must equal dimension");
    std::vector<Edge> edges;
    for (const json& e : array(field(js, "edges"), "edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of vertices");
      const std::size_t u = count(e[0], "vertex");
      const std::size_t v = count(e[1], "vertex");
      if (u < 1 || v < 1 || u > vertices || v > vertices) {
        throw InputError("edge " + e.dump() + " names a vertex outside 1.." +
                         std::to_string(vertices));
      }
      edges.push_back({u - 1, v - 1});
    }
    LoopConvention loops = LoopConvention::kCountTwice;
    if (js.contains("loop_convention")) {
      const std::int64_t c = integer(js["loop_convention"], "loop_convention");
      if (c != 1 && c != 2) throw InputError("loop_convention must be 1 or 2");
      loops = static_cast<LoopConvention>(c);
    }
    system.emplace(std::in_place_type<GraphDegreeJumpSystem>, vertices, std::move(edges), loops);
  } else {
    throw InputError("unknown jump_system kind " + kind.dump());
  }

  const json& obj = field(doc, "objective");
  std::vector<UnivariateConvex> terms;
  for (const json& t : array(field(obj, "terms"), "terms")) terms.push_back(term_from_json(t));
  if (terms.size() != dimension) {
    throw InputError("objective has " + std::to_string(terms.size()) + " terms, expected " +
                     std::to_string(dimension));
  }
  const Value constant = obj.contains("constant") ? value_from_json(obj["constant"]) : Value(0);
  JscInstance out{std::move(*system), SeparableObjective(std::move(terms), constant), std::nullopt};
  if (doc.contains("start")) out.start = point_from_json(doc["start"], dimension);
  return out;
}

DmInstance dm_from_json(const json& doc) {
  const json& dm = field(doc, "delta_matroid");
  const std::size_t n = count(field(dm, "ground_size"), "ground_size");
  if (n > kMaxGroundSize) {
    throw InputError("ground_size exceeds " + std::to_string(kMaxGroundSize));
  }
  std::vector<SetMask> family;
  for (const json& s : array(field(dm, "family"), "family")) family.push_back(set_from_json(s, n));
  if (family.empty()) throw InputError("delta_matroid family is empty");
  Weights weights;
  for (const json& w : array(field(dm, "weights"), "weights")) weights.push_back(value_from_json(w));
  if (weights.size() != n) throw InputError("weights must have ground_size entries");
  DmInstance out{DeltaMatroid(n, std::move(family)), std::move(weights), std::nullopt};
  if (doc.contains("start")) out.start = set_from_json(doc["start"], n);
  return out;
}

std::string canonical_numbers(const std::string& text, char open, char close) {
  std::string body = text;
  if (!body.empty() && (body.front() == open || body.front() == '[')) body.erase(0, 1);
  if (!body.empty() && (body.back() == close || body.back() == ']')) body.pop_back();
  return body;
}

std::vector<std::int64_t> parse_list(const std::string& body, const std::string& whole) {
  std::vector<std::int64_t> out;
  if (body.find_first_not_of(' ') == std::string::npos) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw InputError("malformed list '" + whole + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed list '" + whole + "'");
    }
    if (used != item.size()) throw InputError("malformed list '" + whole + "'");
    out.push_back(v);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

json jsc_trace_to_json(const Trace& trace, const OptimalityProfile* profile) {
  json steps = json::array();
  for (const TraceStep& st : trace.steps) {
    json step = {{"x", point_to_json(st.x)},
                 {"s", st.s.to_string()},
                 {"t", st.t.to_string()},
                 {"f_before", value_to_json(st.f_before)},
                 {"f_after_s", value_to_json(st.f_after_s)},
                 {"f_after", value_to_json(st.f_after)}};
    if (profile) {
      step["mu_before"] = profile->mu(st.x);
      step["mu_after"] = profile->mu(st.x + st.s + st.t);
    }
    steps.push_back(std::move(step));
  }
  return {{"start", point_to_json(trace.start)},
          {"steps", steps},
          {"final", point_to_json(trace.final_point)},
          {"final_value", value_to_json(trace.final_value)}};
}

Trace jsc_trace_from_json(const json& j, Algorithm algorithm) {
  Trace trace;
  trace.algorithm = algorithm;
  const std::size_t n = array(field(j, "start"), "start").size();
  trace.start = point_from_json(j["start"], n);
  for (const json& st : array(field(j, "steps"), "steps")) {
    try {
      trace.steps.push_back({point_from_json(field(st, "x"), n),
                             UnitStep::parse(field(st, "s").get<std::string>()),
                             UnitStep::parse(field(st, "t").get<std::string>()),
                             value_from_json(field(st, "f_before")),
                             value_from_json(field(st, "f_after")),
                             value_from_json(field(st, "f_after_s"))});
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  trace.final_point = point_from_json(field(j, "final"), n);
  trace.final_value = value_from_json(field(j, "final_value"));
  return trace;
}

json dm_trace_to_json(const DmTrace& trace, const DmProfile* profile) {
  json steps = json::array();
  for (const DmStep& st : trace.steps) {
    json step = {{"F", set_to_json(st.before)},
                 {"i", st.move.i + 1},
                 {"j", st.move.j + 1},
                 {"cost_before", value_to_json(st.cost_before)},
                 {"cost_after", value_to_json(st.cost_after)}};
    if (profile) {
      step["mu_before"] = profile->mu(st.before);
      step["mu_after"] = profile->mu(apply(st.before, st.move));
    }
    steps.push_back(std::move(step));
  }
  return {{"start", set_to_json(trace.start)},
          {"steps", steps},
          {"final", set_to_json(trace.final_set)},
          {"final_cost", value_to_json(trace.final_cost)}};
}

DmTrace dm_trace_from_json(const json& j, std::size_t n) {
  DmTrace trace;
  trace.start = set_from_json(field(j, "start"), n);
  for (const json& st : array(field(j, "steps"), "steps")) {
    const std::size_t i = count(field(st, "i"), "i");
    const std::size_t k = count(field(st, "j"), "j");
    if (i < 1 || k < 1 || i > n || k > n) throw InputError("move element outside ground set");
    trace.steps.push_back({set_from_json(field(st, "F"), n),
                           {i - 1, k - 1},
                           value_from_json(field(st, "cost_before")),
                           value_from_json(field(st, "cost_after"))});
  }
  trace.final_set = set_from_json(field(j, "final"), n);
  trace.final_cost = value_from_json(field(j, "final_cost"));
  return trace;
}

}  // namespace

const JumpSystem& as_jump_system(const JumpSystemVariant& system) {
  return std::visit([](const auto& s) -> const JumpSystem& { return s; }, system);
}

ExplicitJumpSystem explicit_form(const JumpSystemVariant& system) {
  if (const auto* g = std::get_if<GraphDegreeJumpSystem>(&system)) return materialize(*g);
  return std::get<ExplicitJumpSystem>(system);
}

Value value_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Value(j.get<std::int64_t>());
    if (j.is_string()) return Value::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const ArithmeticOverflow& e) {
    throw InputError(e.what());
  }
  throw InputError("number must be an integer or an exact decimal string, got " + j.dump());
}

json value_to_json(const Value& v) {
  if (v.is_integer()) return v.num();
  return v.to_string();
}

Instance instance_from_json(const json& doc) {
  try {
    if (integer(field(doc, "format_version"), "format_version") != kFormatVersion) {
      throw InputError("unsupported format_version " + doc["format_version"].dump());
    }
    std::string name;
    if (doc.contains("name")) name = field(doc, "name").get<std::string>();
    const bool has_js = doc.contains("jump_system");
    const bool has_dm = doc.contains("delta_matroid");
    if (has_js == has_dm) {
      throw InputError("instance needs exactly one of 'jump_system' and 'delta_matroid'");
    }
    if (has_dm) return Instance{std::move(name), dm_from_json(doc)};
    const std::size_t dimension = count(field(doc, "dimension"), "dimension");
    if (dimension == 0) throw InputError("dimension must be positive");
    return Instance{std::move(name), jsc_from_json(doc, dimension)};
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const ArithmeticOverflow& e) {
    throw InputError(e.what());
  }
}

json instance_to_json(const Instance& instance) {
  json doc = {{"format_version", kFormatVersion}};
  if (!instance.name.empty()) doc["name"] = instance.name;
  if (instance.is_delta_matroid()) {
    const DmInstance& dm = instance.dm();
    json family = json::array();
    for (SetMask s : dm.family.family()) family.push_back(set_to_json(s));
    json weights = json::array();
    for (const Value& w : dm.weights) weights.push_back(value_to_json(w));
    doc["delta_matroid"] = {{"ground_size", dm.family.ground_size()},
                            {"family", family},
                            {"weights", weights}};
    if (dm.start) doc["start"] = set_to_json(*dm.start);
    return doc;
  }
  const JscInstance& jsc = instance.jsc();
  const std::size_t n = as_jump_system(jsc.system).dimension();
  doc["dimension"] = n;
  if (const auto* g = std::get_if<GraphDegreeJumpSystem>(&jsc.system)) {
    json edges = json::array();
    for (const Edge& e : g->edges()) edges.push_back({e.u + 1, e.v + 1});
    doc["jump_system"] = {{"kind", "graph"},
                          {"vertices", g->vertex_count()},
                          {"edges", edges},
                          {"loop_convention", static_cast<int>(g->loop_convention())}};
  } else {
    json points = json::array();
    for (const IntPoint& p : std::get<ExplicitJumpSystem>(jsc.system).points()) {
      points.push_back(point_to_json(p));
    }
    doc["jump_system"] = {{"kind", "explicit"}, {"points", points}};
  }
  json terms = json::array();
  for (const UnivariateConvex& t : jsc.objective.terms()) terms.push_back(term_to_json(t));
  doc["objective"] = {{"constant", value_to_json(jsc.objective.constant())}, {"terms", terms}};
  if (jsc.start) doc["start"] = point_to_json(*jsc.start);
  return doc;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return instance_from_json(doc);
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

std::string instance_digest(const Instance& instance) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(instance_to_json(instance).dump())));
  return buf;
}

std::vector<ValidationFailure> validate_instance(const Instance& instance, Execution execution) {
  std::vector<ValidationFailure> failures;
  if (instance.is_delta_matroid()) {
    const DmInstance& dm = instance.dm();
    if (const auto cx = verify_symmetric_exchange(dm.family)) {
      failures.push_back({"exchange", "X=" + set_to_string(cx->x) + " Y=" + set_to_string(cx->y) +
                                          " i=" + std::to_string(cx->i + 1)});
    }
    if (dm.start && !dm.family.contains(*dm.start)) {
      failures.push_back({"start", "start " + set_to_string(*dm.start) + " is not in the family"});
    }
    return failures;
  }

  const JscInstance& jsc = instance.jsc();
  const ExplicitJumpSystem system = explicit_form(jsc.system);
  if (const auto cx = verify_jexc(system, execution)) {
    failures.push_back({"jexc", "x=" + cx->x.to_string() + " y=" + cx->y.to_string() +
                                    " s=" + cx->s.to_string()});
  }
  if (const auto cv = verify_convexity(jsc.objective)) {
    failures.push_back({"convexity", "coordinate " + std::to_string(cv->coordinate + 1) +
                                         " at " + std::to_string(cv->point)});
  }
  if (!jsc.objective.covers_inflated(system.bbox())) {
    failures.push_back({"domain", "objective does not cover the bounding box widened by 1"});
  }
  if (jsc.start && !system.contains(*jsc.start)) {
    failures.push_back({"start", "start " + jsc.start->to_string() + " is not in the system"});
  }
  return failures;
}

IntPoint parse_point(const std::string& text) {
  const auto coords = parse_list(canonical_numbers(text, '(', ')'), text);
  if (coords.empty()) throw InputError("empty point '" + text + "'");
  return IntPoint(coords);
}

SetMask parse_set(const std::string& text, std::size_t ground_size) {
  SetMask set = 0;
  for (std::int64_t e : parse_list(canonical_numbers(text, '{', '}'), text)) {
    if (e < 1 || static_cast<std::size_t>(e) > ground_size) {
      throw InputError("set element " + std::to_string(e) + " outside 1.." +
                       std::to_string(ground_size));
    }
    set |= element(static_cast<std::size_t>(e - 1));
  }
  return set;
}

json trace_file_to_json(const TraceFile& file, const OptimalityProfile* profile,
                        const DmProfile* dm_profile) {
  json traces = json::array();
  for (const Trace& t : file.traces) traces.push_back(jsc_trace_to_json(t, profile));
  for (const DmTrace& t : file.dm_traces) traces.push_back(dm_trace_to_json(t, dm_profile));
  return {{"format_version", kFormatVersion},
          {"instance_digest", file.instance_digest},
          {"algorithm", file.algorithm},
          {"tie", std::string(to_string(file.tie))},
          {"tpolicy", file.tpolicy ? json(std::string(to_string(*file.tpolicy))) : json(nullptr)},
          {"seed", file.seed ? json(*file.seed) : json(nullptr)},
          {"truncated", file.truncated},
          {"traces", traces}};
}

TraceFile trace_file_from_json(const json& doc, std::size_t ground_size) {
  try {
    if (integer(field(doc, "format_version"), "format_version") != kFormatVersion) {
      throw InputError("unsupported format_version " + doc["format_version"].dump());
    }
    TraceFile file;
    file.instance_digest = field(doc, "instance_digest").get<std::string>();
    file.algorithm = field(doc, "algorithm").get<std::string>();
    file.tie = parse_tie_break(field(doc, "tie").get<std::string>());
    if (const json& p = field(doc, "tpolicy"); !p.is_null()) {
      file.tpolicy = parse_tstar_policy(p.get<std::string>());
    }
    if (const json& s = field(doc, "seed"); !s.is_null()) file.seed = s.get<std::uint64_t>();
    file.truncated = field(doc, "truncated").get<bool>();
    const bool dm = file.algorithm == "dm-greedy" || file.algorithm == "dm-refined";
    const Algorithm algorithm = dm ? Algorithm::kRefined : parse_algorithm(file.algorithm);
    for (const json& t : array(field(doc, "traces"), "traces")) {
      if (dm) {
        file.dm_traces.push_back(dm_trace_from_json(t, ground_size));
      } else {
        file.traces.push_back(jsc_trace_from_json(t, algorithm));
      }
    }
    return file;
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace jumpopt
