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

#ifndef ECHO_DATASET_FOLDS_HPP_
#define ECHO_DATASET_FOLDS_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "echo/dataset/manifest.hpp"

namespace echo {

// Indices below refer to positions in Manifest::records.
struct SplitIndices {
  std::vector<size_t> train;
  std::vector<size_t> validation;
  std::vector<size_t> test;
};

// Leave-one-fold-out split with a seeded, label-stratified validation
// selector over the training folds. The held-out test fold is never part
// of train or validation.
struct FoldSplit {
  int test_fold = 0;
  std::set<int> train_folds;
  double validation_fraction = 0.1;
  uint64_t selector_seed = 0;

  SplitIndices select(const Manifest& manifest) const;
};

// One split per official fold, each holding that fold out.
std::vector<FoldSplit> resolve_folds(const Manifest& manifest, double validation_fraction = 0.1,
                                     uint64_t selector_seed = 0);

}  // namespace echo

#endif  // ECHO_DATASET_FOLDS_HPP_
