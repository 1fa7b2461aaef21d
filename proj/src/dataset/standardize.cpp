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

#include "echo/dataset/standardize.hpp"

#include <cmath>
#include <cstring>

#include <nlohmann/json.hpp>

#include "echo/core/error.hpp"
#include "echo/core/fs.hpp"
#include "echo/core/hash.hpp"
#include "echo/dataset/resample.hpp"
#include "echo/dataset/wav.hpp"

namespace echo {

namespace fs = std::filesystem;

std::string preprocessing_hash(double clip_length_s) {
  const std::string descriptor = "echo-preproc-v1|rate=16000|mono=avg|pad=tail-zero|resampler="
                                 "blackman-sinc-zc" + std::to_string(kResampleZeroCrossings) +
                                 "|clip_len_s=" + std::to_string(clip_length_s);
  return sha256_hex(descriptor).substr(0, 16);
}

std::vector<float> standardize_samples(const std::vector<double>& mono, int src_rate_hz,
                                       double clip_length_s) {
  const std::vector<double>& at_rate =
      src_rate_hz == kTargetSampleRateHz ? mono : resample(mono, src_rate_hz, kTargetSampleRateHz);

  const size_t target_len =
      static_cast<size_t>(std::llround(clip_length_s * kTargetSampleRateHz));
  std::vector<float> out(target_len, 0.0f);
  const size_t n = std::min(target_len, at_rate.size());
  for (size_t i = 0; i < n; ++i) {
    out[i] = static_cast<float>(at_rate[i]);
  }
  return out;
}

namespace {

fs::path cache_blob_path(const fs::path& cache_dir, const std::string& version,
                         const std::string& clip_id) {
  return cache_dir / version / (clip_id + ".f32");
}

bool try_load_cached(const fs::path& blob, const fs::path& sidecar, size_t expected_len,
                     const std::string& version, Waveform* out) {
  std::error_code ec;
  if (!fs::exists(blob, ec) || !fs::exists(sidecar, ec)) return false;
  try {
    const auto meta = nlohmann::json::parse(read_file(sidecar));
    if (meta.value("preproc_version", "") != version) return false;
    if (meta.value("num_samples", size_t{0}) != expected_len) return false;
    const std::string raw = read_file(blob);
    if (raw.size() != expected_len * sizeof(float)) return false;
    out->samples.resize(expected_len);
    std::memcpy(out->samples.data(), raw.data(), raw.size());
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable cache entries are recomputed
  }
}

}  // namespace

Waveform standardize(const ClipRecord& record, const Manifest& manifest,
                     const StandardizeOptions& options) {
  const std::string version = preprocessing_hash(manifest.clip_length_s);
  const size_t expected_len =
      static_cast<size_t>(std::llround(manifest.clip_length_s * kTargetSampleRateHz));

  Waveform wf;
  wf.sample_rate_hz = kTargetSampleRateHz;
  wf.source_clip_id = record.clip_id;

  fs::path blob, sidecar;
  if (options.cache_dir) {
    blob = cache_blob_path(*options.cache_dir, version, record.clip_id);
    sidecar = blob;
    sidecar.replace_extension(".json");
    if (try_load_cached(blob, sidecar, expected_len, version, &wf)) {
      return wf;
    }
  }

  const WavData wav = read_wav(record.file_path);
  wf.samples = standardize_samples(to_mono(wav), wav.sample_rate_hz, manifest.clip_length_s);

  if (options.cache_dir) {
    atomic_write_file(blob, wf.samples.data(), wf.samples.size() * sizeof(float));
    nlohmann::json meta{{"clip_id", record.clip_id},
                        {"sample_rate_hz", kTargetSampleRateHz},
                        {"num_samples", wf.samples.size()},
                        {"preproc_version", version},
                        {"source_path", record.file_path}};
    atomic_write_file(sidecar, meta.dump(2) + "\n");
  }
  return wf;
}

}  // namespace echo
