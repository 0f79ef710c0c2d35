// Copyright 2026 The citeflow Authors.
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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "citeflow/error.hpp"
#include "citeflow/kernels.hpp"

namespace citeflow::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(CITEFLOW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  if (const char* env = std::getenv("CITEFLOW_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Backend::kScalar;
    if (want == "avx2" && cpu_has_avx2()) return Backend::kAvx2;
  }
  return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

const char* to_string(Backend b) noexcept { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) noexcept { return b == Backend::kScalar || cpu_has_avx2(); }

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("SIMD backend ") + to_string(b) + " is not available");
  }
  current().store(b, std::memory_order_relaxed);
}

double sum(std::span<const double> values) {
#if defined(CITEFLOW_HAVE_AVX2)
  if (active_backend() == Backend::kAvx2) return avx2::sum(values);
#endif
  return scalar::sum(values);
}

CrossMoments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x, double mean_y) {
  if (x.size() != y.size()) throw Error(ErrorCode::kInvalidArgument, "centered_moments: length mismatch");
#if defined(CITEFLOW_HAVE_AVX2)
  if (active_backend() == Backend::kAvx2) return avx2::centered_moments(x, y, mean_x, mean_y);
#endif
  return scalar::centered_moments(x, y, mean_x, mean_y);
}

void divide(std::span<double> values, double divisor) {
#if defined(CITEFLOW_HAVE_AVX2)
  if (active_backend() == Backend::kAvx2) return avx2::divide(values, divisor);
#endif
  scalar::divide(values, divisor);
}

}  // namespace citeflow::kernels
