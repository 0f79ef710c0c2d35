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

#pragma once

#include <span>
#include <string_view>

// Dense double-precision reductions used by the matrix and correlation
// code. Every backend accumulates in the same lane-blocked order (four
// interleaved partial sums, combined as (s0 + s1) + (s2 + s3), then a
// sequential tail), so results are bit-identical across backends.

namespace citeflow::kernels {

enum class Backend { kScalar, kAvx2 };

const char* to_string(Backend b) noexcept;

struct CrossMoments {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

double sum(std::span<const double> values);

// Σ(x-mx)², Σ(y-my)², Σ(x-mx)(y-my). Spans must have equal length.
CrossMoments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                              double mean_y);

// values[i] /= divisor, elementwise.
void divide(std::span<double> values, double divisor);

bool backend_available(Backend b) noexcept;
// Chosen once: CITEFLOW_SIMD=scalar|avx2 if set and available, else the
// best backend the CPU supports.
Backend active_backend() noexcept;
// Throws Error(kInvalidArgument) if the backend is unavailable here.
void set_backend(Backend b);

namespace scalar {
double sum(std::span<const double> values);
CrossMoments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                              double mean_y);
void divide(std::span<double> values, double divisor);
}  // namespace scalar

#if defined(CITEFLOW_HAVE_AVX2)
namespace avx2 {
double sum(std::span<const double> values);
CrossMoments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x,
                              double mean_y);
void divide(std::span<double> values, double divisor);
}  // namespace avx2
#endif

}  // namespace citeflow::kernels
