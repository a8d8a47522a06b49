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

#include "jumpopt/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jumpopt {

int configure_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv(kThreadsEnvVar); env != nullptr) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) omp_set_num_threads(requested);
    } catch (const std::exception&) {
      // Ignored: fall back to the OpenMP default.
    }
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace jumpopt
