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

#ifndef ECHO_FEATURES_MEL_HPP_
#define ECHO_FEATURES_MEL_HPP_

#include <string>

#include <Eigen/Core>

#include "echo/dataset/standardize.hpp"

namespace echo {

struct MelConfig {
  int window_size = 1024;  // 64 ms @ 16 kHz
  int hop_size = 160;      // 10 ms
  int num_mel_bands = 128;
  double fmin_hz = 0.0;
  double fmax_hz = 8000.0;
  double log_floor = 1e-10;  // power clamp before the log

  void validate() const;  // throws ConfigInvalid
  std::string config_hash() const;
};

// HTK mel scale.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Peak-normalized triangular filters, [num_mel_bands x n_bins]. Band centers
// are equally mel-spaced over [fmin, fmax]; bin k sits at k * sample_rate /
// n_fft Hz.
Eigen::MatrixXd mel_filterbank(const MelConfig& cfg, int sample_rate_hz, int n_fft);

struct LogMelSpectrogram {
  Eigen::MatrixXd values;  // [num_mel_bands x num_frames], dB-like
  std::string config_hash;
};

// power STFT -> mel filterbank -> 10*log10(max(power, log_floor)).
LogMelSpectrogram compute_logmel(const Waveform& waveform, const MelConfig& cfg);

}  // namespace echo

#endif  // ECHO_FEATURES_MEL_HPP_
