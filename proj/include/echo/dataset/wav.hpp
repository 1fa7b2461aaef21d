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

#ifndef ECHO_DATASET_WAV_HPP_
#define ECHO_DATASET_WAV_HPP_

#include <filesystem>
#include <vector>

namespace echo {

// Decoded PCM WAV. Samples are interleaved, scaled to [-1, 1].
struct WavData {
  int sample_rate_hz = 0;
  int num_channels = 0;
  std::vector<double> samples;  // frames * channels, interleaved

  size_t num_frames() const {
    return num_channels > 0 ? samples.size() / num_channels : 0;
  }
};

// Reads a RIFF/WAVE file. Supported encodings: PCM 8/16/24/32-bit integer
// and IEEE float 32/64-bit (plain or WAVE_FORMAT_EXTENSIBLE). Anything else
// raises UnsupportedEncoding; malformed containers raise DecodeFailure.
WavData read_wav(const std::filesystem::path& path);

// Channel average into a mono signal.
std::vector<double> to_mono(const WavData& wav);

// Writes 16-bit PCM (format 1) or 32-bit float (format 3) WAV.
void write_wav_pcm16(const std::filesystem::path& path, const std::vector<double>& mono,
                     int sample_rate_hz);
void write_wav_float32(const std::filesystem::path& path, const std::vector<double>& mono,
                       int sample_rate_hz);
// Interleaved multi-channel 16-bit PCM writer.
void write_wav_pcm16_multi(const std::filesystem::path& path,
                           const std::vector<double>& interleaved, int num_channels,
                           int sample_rate_hz);

}  // namespace echo

#endif  // ECHO_DATASET_WAV_HPP_
