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

#ifndef ECHO_FEATURES_STFT_HPP_
#define ECHO_FEATURES_STFT_HPP_

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace echo {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& buf);

int next_pow2(int n);

// Periodic Hann window of the given length.
std::vector<double> hann_window(int length);

// Power spectrogram: frames of `window` samples every `hop` samples, no
// padding (frame count = floor((len - window) / hop) + 1), periodic Hann
// window, FFT size = next power of two >= window. Result is
// [n_fft/2 + 1 bins x n_frames], values |X|^2.
Eigen::MatrixXd power_spectrogram(const std::vector<float>& samples, int window, int hop);

}  // namespace echo

#endif  // ECHO_FEATURES_STFT_HPP_
