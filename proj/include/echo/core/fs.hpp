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

#ifndef ECHO_CORE_FS_HPP_
#define ECHO_CORE_FS_HPP_

#include <filesystem>
#include <string>

namespace echo {

// Write-temp-then-rename; readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);
void atomic_write_file(const std::filesystem::path& path, const void* data, size_t size);

std::string read_file(const std::filesystem::path& path);

// RAII advisory file lock (flock). Blocks until acquired.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path);
  ~FileLock();
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace echo

#endif  // ECHO_CORE_FS_HPP_
