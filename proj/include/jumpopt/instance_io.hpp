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

// JSON instance and trace files (format_version 1).
//
// Numbers are JSON integers or strings holding an exact value ("0.5",
// "-1/3"). Coordinates, vertices, set elements, and unit steps are 1-based
// in files. The full schema is documented in README.md.

#ifndef JUMPOPT_INSTANCE_IO_HPP_
#define JUMPOPT_INSTANCE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jumpopt/delta_matroid.hpp"
#include "jumpopt/jump_system.hpp"
#include "jumpopt/objective.hpp"
#include "jumpopt/oracle.hpp"
#include "jumpopt/solvers.hpp"

namespace jumpopt {

inline constexpr int kFormatVersion = 1;

// Malformed or unreadable input: wrong JSON, missing fields, bad numbers,
// unsupported format_version.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using JumpSystemVariant = std::variant<ExplicitJumpSystem, GraphDegreeJumpSystem>;

const JumpSystem& as_jump_system(const JumpSystemVariant& system);
// The explicit form, materializing graph systems.
ExplicitJumpSystem explicit_form(const JumpSystemVariant& system);

struct JscInstance {
  JumpSystemVariant system;
  SeparableObjective objective;
  std::optional<IntPoint> start;
};

struct DmInstance {
  DeltaMatroid family;
  Weights weights;
  std::optional<SetMask> start;
};

struct Instance {
  std::string name;
  std::variant<JscInstance, DmInstance> body;

  bool is_delta_matroid() const { return std::holds_alternative<DmInstance>(body); }
  const JscInstance& jsc() const { return std::get<JscInstance>(body); }
  const DmInstance& dm() const { return std::get<DmInstance>(body); }
};

// Structural parsing only; semantic checks live in validate_instance.
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& instance);
Instance read_instance(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

// Hex FNV-1a digest of the canonical serialization.
std::string instance_digest(const Instance& instance);

struct ValidationFailure {
  std::string check;    // "jexc", "exchange", "convexity", "domain", "start"
  std::string message;  // includes the counterexample, if any
};

// Axiom, convexity, domain coverage (box inflated by one), and start
// membership. Empty when the instance is valid.
std::vector<ValidationFailure> validate_instance(const Instance& instance,
                                                 Execution execution = Execution::kParallel);

// Parses "(0,3)", "0,3", or "[0,3]".
IntPoint parse_point(const std::string& text);
// Parses "{1,3}", "1,3", "{}" (1-based elements).
SetMask parse_set(const std::string& text, std::size_t ground_size);

nlohmann::json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

// ---- traces ---------------------------------------------------------------

struct TraceFile {
  std::string instance_digest;
  std::string algorithm;  // greedy|refined|refined2|dm-greedy|dm-refined
  TieBreak tie = TieBreak::kLex;
  std::optional<TStarPolicy> tpolicy;
  std::optional<std::uint64_t> seed;
  bool truncated = false;
  std::vector<Trace> traces;      // JSC algorithms
  std::vector<DmTrace> dm_traces;  // delta-matroid algorithms
};

// With a profile, every step is annotated with oracle distances
// (mu_before/mu_after); annotations are ignored on read.
nlohmann::json trace_file_to_json(const TraceFile& file,
                                  const OptimalityProfile* profile = nullptr,
                                  const DmProfile* dm_profile = nullptr);
TraceFile trace_file_from_json(const nlohmann::json& doc, std::size_t ground_size = 0);

}  // namespace jumpopt

#endif  // JUMPOPT_INSTANCE_IO_HPP_
