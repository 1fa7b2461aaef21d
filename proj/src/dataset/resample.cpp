// Copyright 2026 The ECHO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "echo/dataset/resample.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

#include "echo/core/error.hpp"

namespace echo {

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

// Blackman window on [-1, 1].
double blackman(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return 0.42 + 0.5 * std::cos(M_PI * x) + 0.08 * std::cos(2.0 * M_PI * x);
}

}  // namespace

std::vector<double> resample(const std::vector<double>& input, int src_rate_hz,
                             int dst_rate_hz) {
  if (src_rate_hz <= 0 || dst_rate_hz <= 0) {
    throw_error(ErrorCode::DecodeFailure, "invalid sample rates for resample");
  }
  if (src_rate_hz == dst_rate_hz) return input;

  const int g = std::gcd(src_rate_hz, dst_rate_hz);
  const int64_t up = dst_rate_hz / g;    // L
  const int64_t down = src_rate_hz / g;  // M

  // Anti-alias cutoff as a fraction of the input Nyquist.
  const double cutoff = std::min(1.0, static_cast<double>(up) / static_cast<double>(down));
  const double half_width = kResampleZeroCrossings / cutoff;  // in input samples
  const int taps = static_cast<int>(std::ceil(half_width));

  // Polyphase bank: phase r holds K(t + r/L) for integer t in [-taps, taps],
  // normalized so each phase sums to 1 (flat response at DC).
  const int width = 2 * taps + 1;
  std::vector<double> bank(static_cast<size_t>(up) * width);
  for (int64_t r = 0; r < up; ++r) {
    const double frac = static_cast<double>(r) / static_cast<double>(up);
    double sum = 0.0;
    for (int t = -taps; t <= taps; ++t) {
      const double tau = t + frac;
      const double w = cutoff * sinc(cutoff * tau) * blackman(tau / half_width);
      bank[static_cast<size_t>(r) * width + (t + taps)] = w;
      sum += w;
    }
    if (sum != 0.0) {
      for (int t = 0; t < width; ++t) {
        bank[static_cast<size_t>(r) * width + t] /= sum;
      }
    }
  }

  const int64_t in_len = static_cast<int64_t>(input.size());
  const int64_t out_len = in_len * up / down;
  std::vector<double> out(static_cast<size_t>(out_len));

  for (int64_t m = 0; m < out_len; ++m) {
    // Output time in input units: m * M / L = q + r/L.
    const int64_t j = m * down;
    const int64_t q = j / up;
    const int64_t r = j % up;
    const double* k = &bank[static_cast<size_t>(r) * width];
    double acc = 0.0;
    // y[m] = sum_t K(t + r/L) * x[q - t]
    for (int t = -taps; t <= taps; ++t) {
      const int64_t n = q - t;
      if (n < 0 || n >= in_len) continue;
      acc += k[t + taps] * input[static_cast<size_t>(n)];
    }
    out[static_cast<size_t>(m)] = acc;
  }
  return out;
}

}  // namespace echo
