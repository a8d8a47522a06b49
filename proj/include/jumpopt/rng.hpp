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

#ifndef JUMPOPT_RNG_HPP_
#define JUMPOPT_RNG_HPP_

#include <cstdint>
#include <random>

namespace jumpopt {

// Seeded generator used for all corpus generation. split() derives an
// independent child stream so that generating one object never shifts the
// random sequence seen by the next.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Rng split() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  bool coin(double p_true = 0.5) { return std::bernoulli_distribution(p_true)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jumpopt

#endif  // JUMPOPT_RNG_HPP_
