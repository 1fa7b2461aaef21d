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

#ifndef ECHO_DATASET_RESAMPLE_HPP_
#define ECHO_DATASET_RESAMPLE_HPP_

#include <vector>

namespace echo {

// Band-limited sinc resampler (polyphase, Blackman-windowed, per-phase
// DC-normalized). Output length = floor(len * dst / src); signal beyond the
// input edges is treated as zero.
std::vector<double> resample(const std::vector<double>& input, int src_rate_hz,
                             int dst_rate_hz);

// Kernel parameters shared with the direct-evaluation reference used in
// tests: zero-crossing count of the windowed sinc on each side.
inline constexpr int kResampleZeroCrossings = 16;

}  // namespace echo

#endif  // ECHO_DATASET_RESAMPLE_HPP_
