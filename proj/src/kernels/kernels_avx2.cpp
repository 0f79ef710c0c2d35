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

// Compiled with -mavx2 (and without FMA contraction); only reached after a
// runtime CPU check.

#include <immintrin.h>

#include <cstddef>

#include "citeflow/kernels.hpp"

namespace citeflow::kernels::avx2 {
namespace {

double reduce(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double sum(std::span<const double> values) {
  const std::size_t n = values.size();
  const std::size_t blocked = n - n % 4;
  const double* v = values.data();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < blocked; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  double total = reduce(acc);
  for (std::size_t i = blocked; i < n; ++i) total += v[i];
  return total;
}

CrossMoments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x, double mean_y) {
  const std::size_t n = x.size();
  const std::size_t blocked = n - n % 4;
  const __m256d mx = _mm256_set1_pd(mean_x);
  const __m256d my = _mm256_set1_pd(mean_y);
  __m256d xx = _mm256_setzero_pd();
  __m256d yy = _mm256_setzero_pd();
  __m256d xy = _mm256_setzero_pd();
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), mx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y.data() + i), my);
    xx = _mm256_add_pd(xx, _mm256_mul_pd(dx, dx));
    yy = _mm256_add_pd(yy, _mm256_mul_pd(dy, dy));
    xy = _mm256_add_pd(xy, _mm256_mul_pd(dx, dy));
  }
  CrossMoments m{reduce(xx), reduce(yy), reduce(xy)};
  for (std::size_t i = blocked; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    const double pxx = dx * dx;
    const double pyy = dy * dy;
    const double pxy = dx * dy;
    m.xx += pxx;
    m.yy += pyy;
    m.xy += pxy;
  }
  return m;
}

void divide(std::span<double> values, double divisor) {
  const std::size_t n = values.size();
  const std::size_t blocked = n - n % 4;
  double* v = values.data();
  const __m256d d = _mm256_set1_pd(divisor);
  for (std::size_t i = 0; i < blocked; i += 4) _mm256_storeu_pd(v + i, _mm256_div_pd(_mm256_loadu_pd(v + i), d));
  for (std::size_t i = blocked; i < n; ++i) v[i] /= divisor;
}

}  // namespace citeflow::kernels::avx2
