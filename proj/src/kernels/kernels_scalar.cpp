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

// Reference kernels. The four-lane blocking mirrors one 256-bit register of
// doubles so that the vector backends reproduce these results bit for bit.

#include <cstddef>

#include "citeflow/kernels.hpp"

namespace citeflow::kernels::scalar {

double sum(std::span<const double> values) {
  const std::size_t n = values.size();
  const std::size_t blocked = n - n % 4;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < blocked; i += 4) {
    s0 += values[i];
    s1 += values[i + 1];
    s2 += values[i + 2];
    s3 += values[i + 3];
  }
  double total = (s0 + s1) + (s2 + s3);
  for (std::size_t i = blocked; i < n; ++i) total += values[i];
  return total;
}

CrossMoments centered_moments(std::span<const double> x, std::span<const double> y, double mean_x, double mean_y) {
  const std::size_t n = x.size();
  const std::size_t blocked = n - n % 4;
  double xx[4] = {}, yy[4] = {}, xy[4] = {};
  for (std::size_t i = 0; i < blocked; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      const double dx = x[i + lane] - mean_x;
      const double dy = y[i + lane] - mean_y;
      const double pxx = dx * dx;
      const double pyy = dy * dy;
      const double pxy = dx * dy;
      xx[lane] += pxx;
      yy[lane] += pyy;
      xy[lane] += pxy;
    }
  }
  CrossMoments m{(xx[0] + xx[1]) + (xx[2] + xx[3]), (yy[0] + yy[1]) + (yy[2] + yy[3]),
                 (xy[0] + xy[1]) + (xy[2] + xy[3])};
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
  for (double& v : values) v /= divisor;
}

}  // namespace citeflow::kernels::scalar
