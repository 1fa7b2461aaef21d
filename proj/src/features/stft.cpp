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

#include "echo/features/stft.hpp"

#include <cmath>

#include "echo/core/error.hpp"

namespace echo {

void fft_radix2(std::vector<std::complex<double>>& buf) {
  const size_t n = buf.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw_error(ErrorCode::ConfigInvalid, "FFT size must be a power of two");
  }
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = buf[i + k];
        const std::complex<double> v = buf[i + k + len / 2] * w;
        buf[i + k] = u + v;
        buf[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> hann_window(int length) {
  std::vector<double> w(length);
  for (int i = 0; i < length; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * i / length));
  }
  return w;
}

Eigen::MatrixXd power_spectrogram(const std::vector<float>& samples, int window, int hop) {
  if (window <= 0 || hop <= 0 || hop > window) {
    throw_error(ErrorCode::ConfigInvalid, "invalid window/hop");
  }
  const int len = static_cast<int>(samples.size());
  if (len < window) {
    throw_error(ErrorCode::ConfigInvalid, "signal shorter than the analysis window");
  }
  const int n_frames = (len - window) / hop + 1;
  const int n_fft = next_pow2(window);
  const int n_bins = n_fft / 2 + 1;
  const auto win = hann_window(window);

  Eigen::MatrixXd power(n_bins, n_frames);
  std::vector<std::complex<double>> buf(n_fft);
  for (int f = 0; f < n_frames; ++f) {
    const int off = f * hop;
    for (int i = 0; i < window; ++i) {
      buf[i] = std::complex<double>(static_cast<double>(samples[off + i]) * win[i], 0.0);
    }
    for (int i = window; i < n_fft; ++i) buf[i] = 0.0;
    fft_radix2(buf);
    for (int k = 0; k < n_bins; ++k) {
      power(k, f) = std::norm(buf[k]);
    }
  }
  return power;
}

}  // namespace echo
