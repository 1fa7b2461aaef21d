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

#include "echo/dataset/folds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "echo/core/rng.hpp"

namespace echo {

SplitIndices FoldSplit::select(const Manifest& manifest) const {
  SplitIndices out;
  // Stratify by fine label; groups iterate in label_set order so the
  // selection depends only on (manifest order, seed, test_fold).
  std::map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < manifest.records.size(); ++i) {
    const auto& rec = manifest.records[i];
    if (rec.fold_index == test_fold) {
      out.test.push_back(i);
    } else {
      groups[rec.fine_label].push_back(i);
    }
  }

  Rng rng(mix_seed(selector_seed, static_cast<uint64_t>(test_fold)));
  for (auto& [label, indices] : groups) {
    rng.shuffle(indices);
    size_t n_val = 0;
    if (indices.size() >= 2) {
      n_val = std::max<size_t>(
          1, static_cast<size_t>(std::floor(validation_fraction * indices.size() + 0.5)));
      n_val = std::min(n_val, indices.size() - 1);  // keep at least one train record
    }
    for (size_t k = 0; k < indices.size(); ++k) {
      (k < n_val ? out.validation : out.train).push_back(indices[k]);
    }
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.validation.begin(), out.validation.end());
  return out;
}

std::vector<FoldSplit> resolve_folds(const Manifest& manifest, double validation_fraction,
                                     uint64_t selector_seed) {
  std::vector<FoldSplit> splits;
  splits.reserve(manifest.num_folds);
  for (int fold = 1; fold <= manifest.num_folds; ++fold) {
    FoldSplit s;
    s.test_fold = fold;
    for (int f = 1; f <= manifest.num_folds; ++f) {
      if (f != fold) s.train_folds.insert(f);
    }
    s.validation_fraction = validation_fraction;
    s.selector_seed = selector_seed;
    splits.push_back(std::move(s));
  }
  return splits;
}

}  // namespace echo
