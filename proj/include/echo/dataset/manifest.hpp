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

#ifndef ECHO_DATASET_MANIFEST_HPP_
#define ECHO_DATASET_MANIFEST_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace echo {

enum class DatasetKind { US8K, ESC10, ESC50 };

DatasetKind dataset_kind_from_string(const std::string& s);
const char* to_string(DatasetKind kind);

// Official constants per dataset.
int official_num_folds(DatasetKind kind);     // 10 / 5 / 5
double official_clip_length_s(DatasetKind kind);  // 4.0 / 5.0 / 5.0
int official_num_classes(DatasetKind kind);   // 10 / 10 / 50
// Sorted official label sets (US8K class names, ESC-50 categories,
// ESC-10 subset).
const std::vector<std::string>& official_label_set(DatasetKind kind);

struct ClipRecord {
  std::string clip_id;
  std::string file_path;
  std::string fine_label;
  int fold_index = 0;  // 1-based
  double duration_s = 0.0;
};

struct Manifest {
  DatasetKind dataset_kind = DatasetKind::US8K;
  std::vector<ClipRecord> records;
  std::vector<std::string> label_set;  // sorted, unique
  int num_folds = 0;
  double clip_length_s = 0.0;

  int label_index(const std::string& label) const;  // -1 if absent
};

// Reads the official metadata CSV (US8K: UrbanSound8K.csv with columns
// slice_file_name/fold/class; ESC: esc50.csv with filename/fold/category/
// esc10). Extra columns are ignored. For ESC10 only rows flagged esc10 are
// kept. Audio paths are resolved relative to the CSV per the official
// layout (<root>/audio/fold<k>/<file> for US8K, <root>/audio/<file> for ESC).
Manifest load_manifest(const std::filesystem::path& csv_path, DatasetKind kind);

// Canonical JSON rendering (records in file order); used for the bit-exact
// relabel determinism checks and for run-directory provenance.
std::string manifest_to_json(const Manifest& m);

}  // namespace echo

#endif  // ECHO_DATASET_MANIFEST_HPP_
