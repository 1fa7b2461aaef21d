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

#include "echo/dataset/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "echo/core/csv.hpp"
#include "echo/core/error.hpp"

namespace echo {

namespace {

const std::vector<std::string> kUs8kLabels = {
    "air_conditioner", "car_horn",  "children_playing", "dog_bark", "drilling",
    "engine_idling",   "gun_shot",  "jackhammer",       "siren",    "street_music",
};

const std::vector<std::string> kEsc50Labels = {
    "airplane",       "breathing",      "brushing_teeth",  "can_opening",
    "car_horn",       "cat",            "chainsaw",        "chirping_birds",
    "church_bells",   "clapping",       "clock_alarm",     "clock_tick",
    "coughing",       "cow",            "crackling_fire",  "crickets",
    "crow",           "crying_baby",    "dog",             "door_wood_creaks",
    "door_wood_knock", "drinking_sipping", "engine",       "fireworks",
    "footsteps",      "frog",           "glass_breaking",  "hand_saw",
    "helicopter",     "hen",            "insects",         "keyboard_typing",
    "laughing",       "mouse_click",    "pig",             "pouring_water",
    "rain",           "rooster",        "sea_waves",       "sheep",
    "siren",          "sneezing",       "snoring",         "thunderstorm",
    "toilet_flush",   "train",          "vacuum_cleaner",  "washing_machine",
    "water_drops",    "wind",
};

const std::vector<std::string> kEsc10Labels = {
    "chainsaw",  "clock_tick", "crackling_fire", "crying_baby", "dog",
    "helicopter", "rain",      "rooster",        "sea_waves",   "sneezing",
};

bool parse_bool_flag(const std::string& raw) {
  std::string s;
  for (char c : raw) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return s == "true" || s == "1" || s == "yes";
}

int find_column(const std::vector<std::string>& header, const std::string& name) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int require_column(const std::vector<std::string>& header, const std::string& name,
                   const std::filesystem::path& csv) {
  const int idx = find_column(header, name);
  if (idx < 0) {
    throw_error(ErrorCode::MissingColumn, "column '" + name + "' not found in " + csv.string());
  }
  return idx;
}

}  // namespace

DatasetKind dataset_kind_from_string(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "US8K" || u == "URBANSOUND8K") return DatasetKind::US8K;
  if (u == "ESC10" || u == "ESC-10") return DatasetKind::ESC10;
  if (u == "ESC50" || u == "ESC-50") return DatasetKind::ESC50;
  throw_error(ErrorCode::ConfigInvalid, "unknown dataset kind: " + s);
}

const char* to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::US8K: return "US8K";
    case DatasetKind::ESC10: return "ESC10";
    case DatasetKind::ESC50: return "ESC50";
  }
  return "?";
}

int official_num_folds(DatasetKind kind) {
  return kind == DatasetKind::US8K ? 10 : 5;
}

double official_clip_length_s(DatasetKind kind) {
  return kind == DatasetKind::US8K ? 4.0 : 5.0;
}

int official_num_classes(DatasetKind kind) {
  return kind == DatasetKind::ESC50 ? 50 : 10;
}

const std::vector<std::string>& official_label_set(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::US8K: return kUs8kLabels;
    case DatasetKind::ESC10: return kEsc10Labels;
    case DatasetKind::ESC50: return kEsc50Labels;
  }
  return kUs8kLabels;
}

int Manifest::label_index(const std::string& label) const {
  const auto it = std::lower_bound(label_set.begin(), label_set.end(), label);
  if (it == label_set.end() || *it != label) return -1;
  return static_cast<int>(it - label_set.begin());
}

Manifest load_manifest(const std::filesystem::path& csv_path, DatasetKind kind) {
  std::ifstream in(csv_path);
  if (!in) {
    throw_error(ErrorCode::IoError, "cannot open metadata CSV: " + csv_path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw_error(ErrorCode::EmptyManifest, "empty metadata CSV: " + csv_path.string());
  }
  const auto header = split_csv_line(line);

  const bool us8k = kind == DatasetKind::US8K;
  const int file_col = us8k ? require_column(header, "slice_file_name", csv_path)
                            : require_column(header, "filename", csv_path);
  const int fold_col = require_column(header, "fold", csv_path);
  const int label_col = us8k ? require_column(header, "class", csv_path)
                             : require_column(header, "category", csv_path);
  const int esc10_col = us8k ? -1 : require_column(header, "esc10", csv_path);
  // Optional US8K timing columns; used only to record clip durations.
  const int start_col = us8k ? find_column(header, "start") : -1;
  const int end_col = us8k ? find_column(header, "end") : -1;

  Manifest m;
  m.dataset_kind = kind;
  m.num_folds = official_num_folds(kind);
  m.clip_length_s = official_clip_length_s(kind);

  const auto& official = official_label_set(kind);
  // The dataset root is the parent of the metadata directory in both
  // official layouts (<root>/metadata/UrbanSound8K.csv, <root>/meta/esc50.csv).
  const auto root = csv_path.has_parent_path() && csv_path.parent_path().has_parent_path()
                        ? csv_path.parent_path().parent_path()
                        : csv_path.parent_path();

  std::set<std::string> seen_labels;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    const auto field = [&](int idx) -> const std::string& {
      static const std::string empty;
      return idx >= 0 && idx < static_cast<int>(fields.size()) ? fields[idx] : empty;
    };

    if (kind == DatasetKind::ESC10 && !parse_bool_flag(field(esc10_col))) continue;

    ClipRecord rec;
    rec.clip_id = field(file_col);
    rec.fine_label = field(label_col);
    try {
      rec.fold_index = std::stoi(field(fold_col));
    } catch (const std::exception&) {
      throw_error(ErrorCode::DecodeFailure,
                  "bad fold value at line " + std::to_string(line_no) + " of " + csv_path.string());
    }
    if (rec.fold_index < 1 || rec.fold_index > m.num_folds) {
      throw_error(ErrorCode::DecodeFailure,
                  "fold " + std::to_string(rec.fold_index) + " out of range at line " +
                      std::to_string(line_no));
    }
    if (!std::binary_search(official.begin(), official.end(), rec.fine_label)) {
      throw_error(ErrorCode::UnknownLabel,
                  "label '" + rec.fine_label + "' is not a " + to_string(kind) +
                      " class (line " + std::to_string(line_no) + ")");
    }
    if (us8k) {
      rec.file_path =
          (root / "audio" / ("fold" + std::to_string(rec.fold_index)) / rec.clip_id).string();
      if (start_col >= 0 && end_col >= 0) {
        try {
          rec.duration_s = std::stod(field(end_col)) - std::stod(field(start_col));
        } catch (const std::exception&) {
          rec.duration_s = m.clip_length_s;
        }
      } else {
        rec.duration_s = m.clip_length_s;
      }
    } else {
      rec.file_path = (root / "audio" / rec.clip_id).string();
      rec.duration_s = m.clip_length_s;
    }
    seen_labels.insert(rec.fine_label);
    m.records.push_back(std::move(rec));
  }

  if (m.records.empty()) {
    throw_error(ErrorCode::EmptyManifest, "no records in " + csv_path.string());
  }
  m.label_set.assign(seen_labels.begin(), seen_labels.end());
  return m;
}

std::string manifest_to_json(const Manifest& m) {
  nlohmann::ordered_json j;
  j["dataset"] = to_string(m.dataset_kind);
  j["num_folds"] = m.num_folds;
  j["clip_length_s"] = m.clip_length_s;
  j["label_set"] = m.label_set;
  auto& records = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : m.records) {
    records.push_back({{"clip_id", r.clip_id},
                       {"label", r.fine_label},
                       {"fold", r.fold_index}});
  }
  return j.dump(2) + "\n";
}

}  // namespace echo
