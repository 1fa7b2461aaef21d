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

#ifndef ECHO_DATASET_STANDARDIZE_HPP_
#define ECHO_DATASET_STANDARDIZE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "echo/dataset/manifest.hpp"

namespace echo {

inline constexpr int kTargetSampleRateHz = 16000;

// Fixed-length mono 16 kHz waveform. Samples are stored as float32: the
// value each pipeline stage sees is exactly what the cache file holds, so
// cache hits and misses are bit-identical.
struct Waveform {
  std::vector<float> samples;
  int sample_rate_hz = kTargetSampleRateHz;
  std::string source_clip_id;
};

struct StandardizeOptions {
  std::optional<std::filesystem::path> cache_dir;  // nullopt disables caching
};

// Version tag of the standardization pipeline; bump when any step changes.
// The cache directory layout is cache/<preproc-hash>/<clip_id>.f32 + .json.
std::string preprocessing_hash(double clip_length_s);

// Decode -> channel average -> resample to 16 kHz -> pad/truncate to
// exactly clip_length_s * 16000 samples.
Waveform standardize(const ClipRecord& record, const Manifest& manifest,
                     const StandardizeOptions& options = {});

// The same transform on an in-memory signal (used by standardize and by
// callers that already decoded audio).
std::vector<float> standardize_samples(const std::vector<double>& mono, int src_rate_hz,
                                       double clip_length_s);

}  // namespace echo

#endif  // ECHO_DATASET_STANDARDIZE_HPP_
