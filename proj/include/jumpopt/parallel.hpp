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

#ifndef JUMPOPT_PARALLEL_HPP_
#define JUMPOPT_PARALLEL_HPP_

namespace jumpopt {

// Every exhaustive kernel has a serial reference path and an OpenMP path.
// Both must return identical results; the serial path is what the parallel
// one is tested against.
enum class Execution { kSerial, kParallel };

// Name of the environment variable that overrides the OpenMP thread count.
inline constexpr const char* kThreadsEnvVar = "JUMPOPT_THREADS";

// Applies JUMPOPT_THREADS (if set to a positive integer) and returns the
// thread count parallel kernels will use. Returns 1 without OpenMP.
int configure_threads();

}  // namespace jumpopt

#endif  // JUMPOPT_PARALLEL_HPP_
